#pragma once

#include "riordan/matrix.hpp"
#include "riordan/poly.hpp"
#include "riordan/series.hpp"

namespace riordan {

// Riordan pair (f, g), g(0) = 0: the lower-triangular matrix whose column
// n has generating function f*g^n. Proper pairs (f(0) != 0, g'(0) != 0)
// form a group; stretched pairs (g'(0) = 0, e.g. g = x^2/(1+x)) are still
// valid for matrix realization and application but cannot be inverted.
class RiordanPair {
public:
    RiordanPair(Series f, Series g);  // throws BadValuation if g(0) != 0

    const Series& f() const { return f_; }
    const Series& g() const { return g_; }
    bool proper() const { return proper_; }
    int order() const;  // min of the component orders

    static RiordanPair identity(int order);        // (1, x)
    static RiordanPair sign_involution(int order);  // M = (1, -x)

private:
    Series f_, g_;
    bool proper_;
};

// P^phi = (1/(1-phi*x), x/(1-phi*x)); phi = 0 gives the identity pair.
RiordanPair pascal_power(const Rational& phi, int order);

// Group law: (f, g)*(b, a) = (f * (b o g), a o g).
RiordanPair pair_mul(const RiordanPair& p, const RiordanPair& q);

// Inverse of a proper pair: (1/(f o grev), grev), grev = reversion(g).
RiordanPair pair_inverse(const RiordanPair& p);

// The pair acting on a series: f(x) * a(g(x)).
Series pair_apply(const RiordanPair& p, const Series& a);

// Entry (n, k) = [x^n] f*g^k for n < n_rows, k < n_cols (n_cols defaults
// to n_rows). Component orders must be >= n_rows - 1.
Matrix pair_to_matrix(const RiordanPair& p, int n_rows, int n_cols = -1);

// Row n as a polynomial in the column index: sum_k entry(n, k) x^k.
Poly row_gf(const RiordanPair& p, int n);

// Generalized Euler transformation: a |-> 1/(1-phi*x) * a(x/(1-phi*x)).
Series euler_transform(const Rational& phi, const Series& a);

// Shift operator (P^phi)^T on polynomials: c(x) |-> c(x + phi). Exact.
Poly shift_polynomial(const Poly& c, const Rational& phi);

enum class MulSide { left, right };

// Pseudo-eigenbasis relation on a matrix block X:
//   left:  P^phi * X == M X M,   right:  X * P^phi == M X M.
bool pseudo_eigen_check(const Matrix& block, const Rational& phi, MulSide side);
bool pseudo_eigen_check(const RiordanPair& p, const Rational& phi, int n_rows, MulSide side);

// The series b with b(x*a(x)) = a(x), computed as x / reversion(x*a(x)).
// Requires a(0) = 1; the result has order(a).
Series companion_b(const Series& a);

struct Theorem1Report {
    int rows = 0;
    bool identity1 = false;      // rows of (1 + x(log a)', xa) vs reversed b^n
    bool identity2 = false;      // rows of (a, xa) vs (1 - x(log b)') b^(n+1)
    bool lagrange_ratio = false; // [x^n] a^m = m/(m+n) [x^n] b^(m+n)
    bool ok() const { return identity1 && identity2 && lagrange_ratio; }
};

// Checks both row identities entrywise through n_rows rows and the
// coefficient ratio for 1 <= m, n <= n_rows. Requires a(0) = 1 and
// order(a) >= 2*n_rows.
Theorem1Report verify_theorem1(const Series& a, int n_rows);

}  // namespace riordan
