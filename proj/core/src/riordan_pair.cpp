#include "riordan/riordan_pair.hpp"

#include <algorithm>

#include "riordan/errors.hpp"

namespace riordan {

RiordanPair::RiordanPair(Series f, Series g) : f_(std::move(f)), g_(std::move(g)) {
    if (!g_.coeff(0).is_zero()) throw BadValuation("RiordanPair: g(0) != 0");
    proper_ = !f_.coeff(0).is_zero() && g_.order() >= 1 && !g_.coeff(1).is_zero();
}

int RiordanPair::order() const { return std::min(f_.order(), g_.order()); }

RiordanPair RiordanPair::identity(int order) {
    return RiordanPair(Series::constant(Rational(1), order), Series::x(order));
}

RiordanPair RiordanPair::sign_involution(int order) {
    return RiordanPair(Series::constant(Rational(1), order), -Series::x(order));
}

RiordanPair pascal_power(const Rational& phi, int order) {
    Poly denom({Rational(1), -phi});  // 1 - phi*x
    const Series f = inverse(Series::from_poly(denom, order));
    const Series g = shift_up(f, 1).truncated(order);
    return RiordanPair(f, g);
}

RiordanPair pair_mul(const RiordanPair& p, const RiordanPair& q) {
    return RiordanPair(p.f() * compose(q.f(), p.g()), compose(q.g(), p.g()));
}

RiordanPair pair_inverse(const RiordanPair& p) {
    if (!p.proper()) throw NotProper("pair_inverse: pair is not proper");
    const Series grev = reversion(p.g());
    return RiordanPair(inverse(compose(p.f(), grev)), grev);
}

Series pair_apply(const RiordanPair& p, const Series& a) {
    return p.f() * compose(a, p.g());
}

Matrix pair_to_matrix(const RiordanPair& p, int n_rows, int n_cols) {
    if (n_cols < 0) n_cols = n_rows;
    if (p.f().order() < n_rows - 1 || p.g().order() < n_rows - 1)
        throw InsufficientOrder("pair_to_matrix: component order below n_rows - 1");
    Matrix m(n_rows, n_cols);
    Series col = p.f().truncated(n_rows - 1);
    const Series g = p.g().truncated(n_rows - 1);
    for (int k = 0; k < n_cols; ++k) {
        for (int n = 0; n < n_rows; ++n) m.at(n, k) = col.coeff(n);
        if (k + 1 < n_cols) col = col * g;
    }
    return m;
}

Poly row_gf(const RiordanPair& p, int n) {
    const Matrix m = pair_to_matrix(p, n + 1);
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = m.at(n, k);
    return Poly(std::move(c));
}

Series euler_transform(const Rational& phi, const Series& a) {
    return pair_apply(pascal_power(phi, a.order()), a);
}

Poly shift_polynomial(const Poly& c, const Rational& phi) {
    return c.compose(Poly({phi, Rational(1)}));
}

bool pseudo_eigen_check(const Matrix& block, const Rational& phi, MulSide side) {
    const int n = block.rows();
    const Matrix p = pair_to_matrix(pascal_power(phi, n > 0 ? n - 1 : 0), n);
    const Matrix lhs = side == MulSide::left ? p * block : block * p;
    return lhs == block.sign_conjugate();
}

bool pseudo_eigen_check(const RiordanPair& p, const Rational& phi, int n_rows, MulSide side) {
    return pseudo_eigen_check(pair_to_matrix(p, n_rows), phi, side);
}

Series companion_b(const Series& a) {
    if (!a.coeff(0).is_one()) throw BadConstantTerm("companion_b: a(0) != 1");
    const Series hrev = reversion(shift_up(a, 1));  // h = x*a(x), order(a)+1
    return inverse(shift_down(hrev, 1));
}

namespace {

std::vector<Series> power_table(const Series& base, int max_exp) {
    std::vector<Series> p;
    p.reserve(static_cast<std::size_t>(max_exp) + 1);
    p.push_back(Series::constant(Rational(1), base.order()));
    for (int k = 1; k <= max_exp; ++k) p.push_back(p.back() * base);
    return p;
}

}  // namespace

Theorem1Report verify_theorem1(const Series& a, int n_rows) {
    if (!a.coeff(0).is_one()) throw BadConstantTerm("verify_theorem1: a(0) != 1");
    if (a.order() < 2 * n_rows)
        throw InsufficientOrder("verify_theorem1: order(a) < 2*n_rows");

    const Series at = a.truncated(n_rows);
    const Series b = companion_b(at);
    const Series lfac_a = log_deriv_factor(at);                        // 1 + x(log a)'
    const Series lfac_b = Series::constant(Rational(2), b.order()) - log_deriv_factor(b);
                                                                       // 1 - x(log b)'
    const auto apow = power_table(at, n_rows);
    const auto bpow = power_table(b, 2 * n_rows);

    Theorem1Report report;
    report.rows = n_rows;
    report.identity1 = true;
    report.identity2 = true;

    // Column generating functions of (1 + x(log a)', xa) without the x^k shift.
    std::vector<Series> col1;
    col1.reserve(static_cast<std::size_t>(n_rows));
    for (int k = 0; k < n_rows; ++k) col1.push_back(lfac_a * apow[static_cast<std::size_t>(k)]);

    for (int n = 0; n < n_rows; ++n) {
        const Series rhs2 = lfac_b * bpow[static_cast<std::size_t>(n + 1)];
        const Series& bn = bpow[static_cast<std::size_t>(n)];
        for (int k = 0; k <= n; ++k) {
            // (1 + x(log a)', xa) entry (n,k) against [x^(n-k)] b^n
            if (col1[static_cast<std::size_t>(k)].coeff(n - k) != bn.coeff(n - k))
                report.identity1 = false;
            // (a, xa) entry (n,k) = [x^(n-k)] a^(k+1) against
            // [x^(n-k)] (1 - x(log b)') b^(n+1)
            if (apow[static_cast<std::size_t>(k + 1)].coeff(n - k) != rhs2.coeff(n - k))
                report.identity2 = false;
        }
    }

    report.lagrange_ratio = true;
    for (int m = 1; m <= n_rows && report.lagrange_ratio; ++m)
        for (int n = 1; n <= n_rows; ++n) {
            const Rational lhs = apow[static_cast<std::size_t>(m)].coeff(n);
            const Rational rhs = Rational(m, m + n) * bpow[static_cast<std::size_t>(m + n)].coeff(n);
            if (lhs != rhs) { report.lagrange_ratio = false; break; }
        }
    return report;
}

}  // namespace riordan
