#pragma once

#include <utility>
#include <vector>

#include "riordan/poly.hpp"
#include "riordan/rational.hpp"

namespace riordan {

// Truncated formal power series over the rationals. A Series of order N
// stores the coefficients of x^0..x^N; nothing is known beyond x^N.
//
// Truncation contract: every operation documents the order through which
// its result is exact; operations mixing two series take the minimum of
// the operand orders. Values are immutable once built and all operations
// are pure, so Series can be shared freely across threads.
class Series {
public:
    // Zero series of the given order (order >= 0).
    explicit Series(int order) : c_(static_cast<std::size_t>(order) + 1) {}
    // order = coeffs.size() - 1; the list must be nonempty.
    explicit Series(std::vector<Rational> coeffs);

    static Series constant(const Rational& v, int order);
    static Series x(int order);
    // The truncation of a polynomial; exact at every order.
    static Series from_poly(const Poly& p, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
    const Rational& operator[](int k) const { return coeff(k); }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    // Index of the first nonzero coefficient, or order()+1 if none visible.
    int valuation() const;

    Series truncated(int new_order) const;  // new_order <= order()
    // First n+1 coefficients as a polynomial (n <= order()).
    Poly poly_prefix(int n) const;

    // Strict equality: same order and identical coefficients.
    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

    Series operator-() const;
    friend Series operator+(const Series& a, const Series& b);  // order = min
    friend Series operator-(const Series& a, const Series& b);  // order = min
    friend Series operator*(const Series& a, const Series& b);  // Cauchy product, order = min
    friend Series operator*(const Rational& s, const Series& a);

private:
    std::vector<Rational> c_;
};

// alpha*a + beta*b, order = min(order(a), order(b)).
Series linear_combination(const Rational& alpha, const Series& a,
                          const Rational& beta, const Series& b);

// Multiplicative inverse; requires a(0) != 0 (throws ZeroConstantTerm).
Series inverse(const Series& a);

// a(g(x)); requires g(0) = 0 (throws NonzeroInnerConstant). Exact through
// min(order(a), order(g)).
Series compose(const Series& a, const Series& g);

// p(g(x)) for an exact polynomial p; any g(0) is allowed. Order = order(g).
Series compose(const Poly& p, const Series& g);

// Compositional inverse of h: h(0) = 0, h'(0) != 0 (throws BadValuation).
// Triangular back-substitution; the result satisfies h(rev(h)) = x through
// order(h).
Series reversion(const Series& h);

// Square root with positive constant term; a(0) must be a rational square
// (throws NonSquareConstant).
Series sqrt(const Series& a);

// Formal derivative, order = order(a) - 1 (requires order(a) >= 1).
Series derivative(const Series& a);

// 1 + x*a'(x)/a(x); requires a(0) != 0. Order = order(a).
Series log_deriv_factor(const Series& a);

// (a1, a2) with a(x) = a1(x^2) + x*a2(x^2). a1 has order floor(N/2), a2
// has order floor((N-1)/2): the top coefficient of a2 at even N would
// read a_{N+1}, which is unknown.
std::pair<Series, Series> even_odd_split(const Series& a);

// a * x^k; every stored coefficient is still exact, so order = order(a)+k.
Series shift_up(const Series& a, int k);

// a / x^k; the first k coefficients must be zero (throws BadValuation).
// Order = order(a) - k.
Series shift_down(const Series& a, int k);

// Substitute x -> x^2. Exact through 2*order(a)+1 (the odd coefficients
// are known to vanish).
Series stretch2(const Series& a);

Series pow(const Series& a, long e);  // e < 0 requires a(0) != 0

// Coefficients agree through x^upto. Both operands must have order >= upto
// (throws InsufficientOrder), so a too-short series can never pass quietly.
bool agree_through(const Series& a, const Series& b, int upto);

}  // namespace riordan
