#include "riordan/serialize.hpp"

#include <sstream>

#include <json.hpp>

#include "riordan/errors.hpp"

namespace riordan {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw ParseError("invalid JSON document");
    return j;
}

std::vector<Rational> rationals_from_array(const json& arr) {
    if (!arr.is_array()) throw ParseError("expected an array of rational strings");
    std::vector<Rational> out;
    out.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_string()) throw ParseError("expected a rational string");
        out.push_back(Rational::parse(v.get<std::string>()));
    }
    return out;
}

std::string dump(const json& j, int indent) { return indent < 0 ? j.dump() : j.dump(indent); }

}  // namespace

std::string series_to_json(const Series& a, int indent) {
    json coeffs = json::array();
    for (int k = 0; k <= a.order(); ++k) coeffs.push_back(a.coeff(k).str());
    return dump(json{{"order", a.order()}, {"coeffs", std::move(coeffs)}}, indent);
}

Series series_from_json(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        throw ParseError("series document needs \"order\" and \"coeffs\"");
    if (!j["order"].is_number_integer()) throw ParseError("\"order\" must be an integer");
    auto coeffs = rationals_from_array(j["coeffs"]);
    const auto order = j["order"].get<long long>();
    if (order < 0 || static_cast<std::size_t>(order) + 1 != coeffs.size())
        throw ParseError("series order does not match the coefficient count");
    return Series(std::move(coeffs));
}

std::string matrix_to_json(const Matrix& m, int indent) {
    json entries = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        entries.push_back(std::move(row));
    }
    return dump(json{{"rows", m.rows()}, {"entries", std::move(entries)}}, indent);
}

Matrix matrix_from_json(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object() || !j.contains("rows") || !j.contains("entries"))
        throw ParseError("matrix document needs \"rows\" and \"entries\"");
    const auto& entries = j["entries"];
    if (!entries.is_array() || entries.empty()) throw ParseError("\"entries\" must be a nonempty array");
    if (!j["rows"].is_number_integer() ||
        j["rows"].get<long long>() != static_cast<long long>(entries.size()))
        throw ParseError("matrix row count does not match \"entries\"");
    std::vector<std::vector<Rational>> rows;
    rows.reserve(entries.size());
    for (const auto& row : entries) rows.push_back(rationals_from_array(row));
    const std::size_t cols = rows.front().size();
    for (const auto& row : rows)
        if (row.size() != cols) throw ParseError("matrix rows have uneven lengths");
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(cols));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            m.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    return m;
}

std::string poly_to_json(const Poly& p) {
    json arr = json::array();
    for (int k = 0; k <= std::max(p.degree(), 0); ++k) arr.push_back(p.coeff(k).str());
    return arr.dump();
}

Poly poly_from_json(const std::string& text) {
    return Poly(rationals_from_array(parse_json(text)));
}

std::string matrix_to_csv(const Matrix& m) {
    std::ostringstream os;
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (c) os << ',';
            os << m.at(r, c).str();
        }
        os << '\n';
    }
    return os.str();
}

std::string series_to_csv(const Series& a) {
    std::ostringstream os;
    for (int k = 0; k <= a.order(); ++k) {
        if (k) os << ',';
        os << a.coeff(k).str();
    }
    os << '\n';
    return os.str();
}

namespace {

void append_terms(std::ostringstream& os, const std::vector<Rational>& coeffs, bool* any) {
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const Rational& c = coeffs[k];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (*any)
            os << (negative ? " - " : " + ");
        else if (negative)
            os << '-';
        *any = true;
        if (k == 0) {
            os << mag.str();
            continue;
        }
        if (!mag.is_one()) os << mag.str() << '*';
        os << 'x';
        if (k > 1) os << '^' << k;
    }
}

}  // namespace

std::string series_pretty(const Series& a) {
    std::ostringstream os;
    bool any = false;
    append_terms(os, a.coeffs(), &any);
    if (!any) os << '0';
    os << " + O(x^" << a.order() + 1 << ")";
    return os.str();
}

std::string poly_pretty(const Poly& p) {
    std::ostringstream os;
    bool any = false;
    append_terms(os, p.trimmed().coeffs(), &any);
    if (!any) os << '0';
    return os.str();
}

std::string matrix_pretty(const Matrix& m) {
    std::vector<std::string> cells;
    std::size_t width = 1;
    cells.reserve(static_cast<std::size_t>(m.rows()) * static_cast<std::size_t>(m.cols()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            cells.push_back(m.at(r, c).str());
            width = std::max(width, cells.back().size());
        }
    std::ostringstream os;
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            const std::string& cell =
                cells[static_cast<std::size_t>(r) * static_cast<std::size_t>(m.cols()) +
                      static_cast<std::size_t>(c)];
            os << std::string(width - cell.size() + (c ? 2 : 0), ' ') << cell;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace riordan
