#include "riordan/families.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/riordan_pair.hpp"

namespace riordan {

std::optional<Family> family_from_string(std::string_view name) {
    if (name == "C") return Family::C;
    if (name == "S") return Family::S;
    if (name == "D") return Family::D;
    if (name == "E") return Family::E;
    if (name == "L") return Family::L;
    if (name == "F") return Family::F;
    return std::nullopt;
}

std::string_view family_name(Family tag) {
    switch (tag) {
        case Family::C: return "C";
        case Family::S: return "S";
        case Family::D: return "D";
        case Family::E: return "E";
        case Family::L: return "L";
        case Family::F: return "F";
    }
    return "?";
}

namespace {

bool is_d_kind(Family tag) { return tag == Family::C || tag == Family::D || tag == Family::L; }

// Effective beta of the recurrence; nullopt means the caller must supply it.
std::optional<Rational> implied_beta(Family tag) {
    switch (tag) {
        case Family::C:
        case Family::S: return Rational(1);
        case Family::L:
        case Family::F: return Rational(-1);
        default: return std::nullopt;
    }
}

Rational resolve_beta(Family tag, const std::optional<Rational>& beta) {
    const auto implied = implied_beta(tag);
    if (implied) {
        if (beta && *beta != *implied)
            throw std::invalid_argument("beta is fixed for family " + std::string(family_name(tag)));
        return *implied;
    }
    if (!beta) throw std::invalid_argument("family D/E requires beta");
    return *beta;
}

// p_n = x p_{n-1} - beta p_{n-2} from the given seeds, n >= 0.
Poly recurrence(const Poly& p0, const Poly& p1, const Rational& beta, long n) {
    if (n == 0) return p0;
    Poly prev = p0, cur = p1;
    const Poly x = Poly::x();
    for (long k = 2; k <= n; ++k) {
        Poly next = x * cur - beta * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

Poly family_poly(Family tag, long n, std::optional<Rational> beta) {
    const Rational b = resolve_beta(tag, beta);
    if (n < 0) {
        switch (tag) {
            case Family::L: {
                const Poly p = family_poly(Family::L, -n);
                return (-n) % 2 == 0 ? p : -p;
            }
            case Family::F: {
                const Poly p = family_poly(Family::F, -n);
                return (-n) % 2 == 1 ? p : -p;
            }
            case Family::S:
                // S_{-n} = -S_{n-2}; at n = 1 this forces S_{-1} = 0.
                if (n == -1) return Poly();
                return -family_poly(Family::S, -n - 2);
            default:
                throw UnsupportedIndex("no negative-index convention for family " +
                                       std::string(family_name(tag)));
        }
    }
    if (tag == Family::F) {
        // F_0 = 0, F_1 = 1, then the E recurrence with beta = -1.
        if (n == 0) return Poly();
        return recurrence(Poly::constant(Rational(1)), Poly::x(), b, n - 1);
    }
    const Poly p0 = Poly::constant(Rational(is_d_kind(tag) ? 2 : 1));
    return recurrence(p0, Poly::x(), b, n);
}

bool family_row_check(Family tag, int n, std::optional<Rational> beta) {
    if (n < 0) throw UnsupportedIndex("family_row_check: n must be >= 0");
    const Rational b = resolve_beta(tag, beta);
    const bool d_kind = is_d_kind(tag);
    if (d_kind && n == 0) return true;  // the row identity starts at n = 1

    const int order = std::max(n, 1);
    const Poly denom({Rational(1), Rational(0), b});  // 1 + b x^2
    const Series dinv = inverse(Series::from_poly(denom, order));
    const Series f = d_kind
        ? Series::from_poly(Poly({Rational(1), Rational(0), -b}), order) * dinv
        : dinv;
    const Series g = shift_up(dinv, 1).truncated(order);
    const Poly row = row_gf(RiordanPair(f, g), n);

    const Poly expected = d_kind ? family_poly(Family::D, n, b) : family_poly(Family::E, n, b);
    return row == expected;
}

Poly reverse_J(const Poly& c, int n) {
    if (c.degree() > n) throw DegreeTooHigh("reverse_J: degree above n");
    if (c.is_zero()) return Poly();
    std::vector<Rational> r(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) r[static_cast<std::size_t>(k)] = c.coeff(n - k);
    return Poly(std::move(r));
}

Series family_gf(SequenceKind kind, const Rational& phi, const Rational& beta, int order) {
    const Poly denom({Rational(1), -phi, beta});
    const Series dinv = inverse(Series::from_poly(denom, order));
    if (kind == SequenceKind::lucas)
        return Series::from_poly(Poly({Rational(2), -phi}), order) * dinv;
    return shift_up(dinv, 1).truncated(order);
}

bool root_form_check(Family tag, int n, std::optional<Rational> beta, double tol) {
    if (n < 1) throw UnsupportedIndex("root_form_check: n must be >= 1");
    if (tag == Family::L || tag == Family::F)
        throw std::invalid_argument("root_form_check: L/F have no real product form (beta = -1)");
    const Rational b = resolve_beta(tag, beta);
    if (b.sign() < 0)
        throw std::invalid_argument("root_form_check: beta must be >= 0");

    const bool d_kind = is_d_kind(tag);
    const Poly p = d_kind ? family_poly(Family::D, n, b) : family_poly(Family::E, n, b);
    const double scale = 2.0 * std::sqrt(b.to_double());

    std::vector<double> roots;
    roots.reserve(static_cast<std::size_t>(n));
    for (int m = 1; m <= n; ++m) {
        const double angle = d_kind ? (2.0 * m - 1.0) / (2.0 * n) * std::numbers::pi
                                    : static_cast<double>(m) / (n + 1.0) * std::numbers::pi;
        roots.push_back(scale * std::cos(angle));
    }

    for (double r : roots)
        if (std::abs(p.eval_double(r)) >= tol) return false;

    // Expand prod (x - r_m) and compare against the exact coefficients.
    std::vector<double> prod{1.0};
    for (double r : roots) {
        std::vector<double> next(prod.size() + 1, 0.0);
        for (std::size_t i = 0; i < prod.size(); ++i) {
            next[i + 1] += prod[i];
            next[i] -= r * prod[i];
        }
        prod = std::move(next);
    }
    for (std::size_t k = 0; k < prod.size(); ++k)
        if (std::abs(prod[k] - p.coeff(static_cast<int>(k)).to_double()) >= tol) return false;
    return true;
}

bool trig_product_check(int n, double tol) {
    if (n < 1) throw UnsupportedIndex("trig_product_check: n must be >= 1");
    const double pi = std::numbers::pi;
    const bool even = n % 2 == 0;
    const double pow2 = std::ldexp(1.0, n - 1);  // 2^(n-1)

    double cos_odd = 1.0, sin_odd = 1.0;
    for (int m = 1; m <= n / 2; ++m) {
        const double c = std::cos((2.0 * m - 1.0) / (2.0 * n) * pi);
        const double s = std::sin((2.0 * m - 1.0) / (2.0 * n) * pi);
        cos_odd *= c * c;
        sin_odd *= s * s;
    }
    double cos_frac = 1.0, sin_frac = 1.0;
    for (int m = 1; m <= (n - 1) / 2; ++m) {
        const double c = std::cos(static_cast<double>(m) / n * pi);
        const double s = std::sin(static_cast<double>(m) / n * pi);
        cos_frac *= c * c;
        sin_frac *= s * s;
    }

    const double one = 1.0 / pow2, enn = n / pow2;
    return std::abs(cos_odd - (even ? one : enn)) < tol &&
           std::abs(cos_frac - (even ? enn : one)) < tol &&
           std::abs(sin_odd - one) < tol &&
           std::abs(sin_frac - enn) < tol;
}

}  // namespace riordan
