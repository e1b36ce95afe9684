#include "riordan/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "riordan/errors.hpp"

namespace riordan {

Series::Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("Series: empty coefficient list");
}

Series Series::constant(const Rational& v, int order) {
    Series s(order);
    s.c_[0] = v;
    return s;
}

Series Series::x(int order) {
    Series s(order);
    if (order < 1) throw InsufficientOrder("Series::x: order must be >= 1");
    s.c_[1] = Rational(1);
    return s;
}

Series Series::from_poly(const Poly& p, int order) {
    Series s(order);
    for (int k = 0; k <= order; ++k) s.c_[static_cast<std::size_t>(k)] = p.coeff(k);
    return s;
}

bool Series::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& v) { return v.is_zero(); });
}

int Series::valuation() const {
    for (int k = 0; k <= order(); ++k)
        if (!coeff(k).is_zero()) return k;
    return order() + 1;
}

Series Series::truncated(int new_order) const {
    if (new_order > order())
        throw InsufficientOrder("Series::truncated: cannot extend a truncation");
    std::vector<Rational> c(c_.begin(), c_.begin() + new_order + 1);
    return Series(std::move(c));
}

Poly Series::poly_prefix(int n) const {
    if (n > order()) throw InsufficientOrder("Series::poly_prefix: order too small");
    std::vector<Rational> c(c_.begin(), c_.begin() + n + 1);
    return Poly(std::move(c));
}

Series Series::operator-() const {
    Series r(order());
    for (int k = 0; k <= order(); ++k) r.c_[static_cast<std::size_t>(k)] = -coeff(k);
    return r;
}

Series operator+(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k)
        r.c_[static_cast<std::size_t>(k)] = a.coeff(k) + b.coeff(k);
    return r;
}

Series operator-(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k)
        r.c_[static_cast<std::size_t>(k)] = a.coeff(k) - b.coeff(k);
    return r;
}

Series operator*(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    const int n = r.order();
    for (int i = 0; i <= std::min(n, a.order()); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.coeff(j).is_zero()) continue;
            r.c_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
    }
    return r;
}

Series operator*(const Rational& s, const Series& a) {
    Series r(a.order());
    for (int k = 0; k <= a.order(); ++k) r.c_[static_cast<std::size_t>(k)] = s * a.coeff(k);
    return r;
}

Series linear_combination(const Rational& alpha, const Series& a,
                          const Rational& beta, const Series& b) {
    return alpha * a + beta * b;
}

Series inverse(const Series& a) {
    if (a.coeff(0).is_zero()) throw ZeroConstantTerm("inverse: a(0) = 0");
    const int n = a.order();
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
    const Rational a0inv = Rational(1) / a.coeff(0);
    b[0] = a0inv;
    for (int m = 1; m <= n; ++m) {
        Rational acc(0);
        for (int k = 1; k <= m; ++k) acc += a.coeff(k) * b[static_cast<std::size_t>(m - k)];
        b[static_cast<std::size_t>(m)] = -acc * a0inv;
    }
    return Series(std::move(b));
}

Series compose(const Series& a, const Series& g) {
    if (!g.coeff(0).is_zero())
        throw NonzeroInnerConstant("compose: inner series has g(0) != 0");
    const int n = std::min(a.order(), g.order());
    const Series gt = g.order() == n ? g : g.truncated(n);
    // Horner from the top coefficient down.
    Series r = Series::constant(a.coeff(a.order()), n);
    for (int k = a.order() - 1; k >= 0; --k) {
        r = r * gt;
        r = r + Series::constant(a.coeff(k), n);
    }
    return r;
}

Series compose(const Poly& p, const Series& g) {
    Series r = Series::constant(p.coeff(std::max(p.degree(), 0)), g.order());
    for (int k = p.degree() - 1; k >= 0; --k) {
        r = r * g;
        r = r + Series::constant(p.coeff(k), g.order());
    }
    return r;
}

Series reversion(const Series& h) {
    if (!h.coeff(0).is_zero() || h.order() < 1 || h.coeff(1).is_zero())
        throw BadValuation("reversion: need h(0) = 0 and h'(0) != 0");
    const int n = h.order();
    const Rational h1inv = Rational(1) / h.coeff(1);

    // Back-substitution on h(r(x)) = x. powers[k] holds the coefficients of
    // r^k; extending powers[k] to degree m only reads r_1..r_{m-k+1}, all of
    // which are known before r_m is solved.
    std::vector<std::vector<Rational>> powers(static_cast<std::size_t>(n) + 1);
    powers[0] = {Rational(1)};
    std::vector<Rational> r(static_cast<std::size_t>(n) + 1);
    r[1] = h1inv;
    powers[1] = {Rational(0), r[1]};
    for (int m = 2; m <= n; ++m) {
        for (int k = 2; k <= m; ++k) {
            auto& pk = powers[static_cast<std::size_t>(k)];
            if (pk.empty()) pk.assign(static_cast<std::size_t>(k), Rational(0));
            const auto& prev = powers[static_cast<std::size_t>(k - 1)];
            Rational acc(0);
            for (int j = 1; j <= m - k + 1; ++j) {
                if (m - j < static_cast<int>(prev.size()))
                    acc += r[static_cast<std::size_t>(j)] * prev[static_cast<std::size_t>(m - j)];
            }
            pk.push_back(acc);  // pk[m] = [x^m] r^k
        }
        Rational acc(0);
        for (int k = 2; k <= m; ++k)
            acc += h.coeff(k) * powers[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)];
        r[static_cast<std::size_t>(m)] = -acc * h1inv;
        powers[1].push_back(r[static_cast<std::size_t>(m)]);
    }
    return Series(std::move(r));
}

Series sqrt(const Series& a) {
    const auto s0 = a.coeff(0).sqrt();
    if (!s0) throw NonSquareConstant("sqrt: a(0) is not the square of a rational");
    const int n = a.order();
    std::vector<Rational> s(static_cast<std::size_t>(n) + 1);
    s[0] = *s0;
    if (s[0].is_zero()) throw NonSquareConstant("sqrt: a(0) = 0 has no unit square root");
    const Rational half_inv = Rational(1) / (Rational(2) * s[0]);
    for (int m = 1; m <= n; ++m) {
        Rational acc(0);
        for (int k = 1; k < m; ++k) acc += s[static_cast<std::size_t>(k)] * s[static_cast<std::size_t>(m - k)];
        s[static_cast<std::size_t>(m)] = (a.coeff(m) - acc) * half_inv;
    }
    return Series(std::move(s));
}

Series derivative(const Series& a) {
    if (a.order() < 1) throw InsufficientOrder("derivative: order 0 input");
    std::vector<Rational> d(static_cast<std::size_t>(a.order()));
    for (int k = 1; k <= a.order(); ++k)
        d[static_cast<std::size_t>(k - 1)] = Rational(k) * a.coeff(k);
    return Series(std::move(d));
}

Series log_deriv_factor(const Series& a) {
    if (a.coeff(0).is_zero()) throw ZeroConstantTerm("log_deriv_factor: a(0) = 0");
    if (a.order() < 1) return Series::constant(Rational(1), 0);
    // 1 + x a'/a: x*a' has coefficient k*a_k at x^k, exact through order(a).
    std::vector<Rational> c(static_cast<std::size_t>(a.order()) + 1);
    for (int k = 1; k <= a.order(); ++k) c[static_cast<std::size_t>(k)] = Rational(k) * a.coeff(k);
    return Series::constant(Rational(1), a.order()) + Series(std::move(c)) * inverse(a);
}

std::pair<Series, Series> even_odd_split(const Series& a) {
    const int n = a.order();
    if (n < 1) throw InsufficientOrder("even_odd_split: nothing is known about the odd part");
    const int n1 = n / 2;
    const int n2 = (n - 1) / 2;
    std::vector<Rational> c1(static_cast<std::size_t>(n1) + 1), c2(static_cast<std::size_t>(n2) + 1);
    for (int k = 0; k <= n1; ++k) c1[static_cast<std::size_t>(k)] = a.coeff(2 * k);
    for (int k = 0; k <= n2; ++k) c2[static_cast<std::size_t>(k)] = a.coeff(2 * k + 1);
    return {Series(std::move(c1)), Series(std::move(c2))};
}

Series shift_up(const Series& a, int k) {
    std::vector<Rational> c(static_cast<std::size_t>(a.order() + k) + 1);
    for (int i = 0; i <= a.order(); ++i) c[static_cast<std::size_t>(i + k)] = a.coeff(i);
    return Series(std::move(c));
}

Series shift_down(const Series& a, int k) {
    if (k > a.order()) throw InsufficientOrder("shift_down: order too small");
    for (int i = 0; i < k; ++i)
        if (!a.coeff(i).is_zero()) throw BadValuation("shift_down: valuation below shift");
    std::vector<Rational> c(a.coeffs().begin() + k, a.coeffs().end());
    return Series(std::move(c));
}

Series stretch2(const Series& a) {
    std::vector<Rational> c(static_cast<std::size_t>(2 * a.order() + 1) + 1);
    for (int i = 0; i <= a.order(); ++i) c[static_cast<std::size_t>(2 * i)] = a.coeff(i);
    return Series(std::move(c));
}

Series pow(const Series& a, long e) {
    if (e < 0) return pow(inverse(a), -e);
    Series r = Series::constant(Rational(1), a.order());
    for (long i = 0; i < e; ++i) r = r * a;
    return r;
}

bool agree_through(const Series& a, const Series& b, int upto) {
    if (a.order() < upto || b.order() < upto)
        throw InsufficientOrder("agree_through: operand order below comparison bound");
    for (int k = 0; k <= upto; ++k)
        if (a.coeff(k) != b.coeff(k)) return false;
    return true;
}

}  // namespace riordan
