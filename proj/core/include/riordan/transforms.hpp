#pragma once

#include <utility>

#include "riordan/poly.hpp"
#include "riordan/series.hpp"

namespace riordan {

// First-type transformation data for a(x) = 1/(1 - phi x + beta x^2):
//   b = (1 + phi x + sqrt(1 + 2 phi x + (phi^2 - 4 beta) x^2)) / 2,
// the companion series of a. log_factor is 1 - x (log b)' = 1/sqrt_disc.
// Construction cross-checks b against companion_b(a) and the log_factor
// identity; both are exact and throw std::logic_error on mismatch.
struct TypeOneContext {
    Rational phi, beta;
    int order;
    Series b, b_inv, sqrt_disc, log_factor;
};

TypeOneContext type1_context(const Rational& phi, const Rational& beta, int order);

// The decomposition b^n = (c_n + s_n * sqrt_disc)/2 computed through the
// series route: c_n = b^n + beta^n x^(2n) b^(-n) (an exact polynomial of
// degree <= n), s_n = (b^n - beta^n x^(2n) b^(-n))/sqrt_disc (degree < n).
// A nonzero truncation tail throws NonPolynomialResidue. Requires 2n <= order.
std::pair<Poly, Poly> type1_cs(const TypeOneContext& ctx, int n);

// The same polynomials from the closed forms J_n D_n(x + phi, beta) and
// J_{n-1} E_{n-1}(x + phi, beta); the independent route for tests.
std::pair<Poly, Poly> type1_cs_closed(const Rational& phi, const Rational& beta, int n);

// b^(2n) - c_n b^n + beta^n x^(2n) = 0 through the context order.
bool type1_quadratic_check(const TypeOneContext& ctx, int n);

// The Catalan series in x^2: C(x^2) = (1 - sqrt(1 - 4 x^2))/(2 x^2).
Series catalan_x2(int order);

// Catalan power identity
//   C^k(x^2) = -(1/x)^k S_{k-2}(1/x) + (1/x)^(k-1) S_{k-1}(1/x) C(x^2)
// for any integer k, with S_{-n} = -S_{n-2}. Both sides are multiplied by
// x^max(2k-2, 0), after which every term is an honest power series.
// Requires order >= 2|k| + 4.
bool catalan_power_check(long k, int order);

// Second-type transformation data for a(x) = 1/sqrt(1 - 2 phi x + beta x^2):
//   b = phi x + sqrt(1 + (phi^2 - beta) x^2).
// log_factor is 1 - x (log b)' = 1/(b * sqrt_disc); construction
// cross-checks it and the identity (beta x^2 - 1) b^(-1) = phi x - sqrt_disc.
struct TypeTwoContext {
    Rational phi, beta;
    int order;
    Series b, b_inv, sqrt_disc, log_factor;
};

TypeTwoContext type2_context(const Rational& phi, const Rational& beta, int order);

// b^n = t_n + u_n * sqrt_disc via the series route:
//   t_n = (b^n + (beta x^2 - 1)^n b^(-n))/2   (degree <= n),
//   u_n = (b^n - (beta x^2 - 1)^n b^(-n))/(2 sqrt_disc)   (degree < n).
std::pair<Poly, Poly> type2_tu(const TypeTwoContext& ctx, int n);

// Row polynomials of the even/odd Pascal-column matrices
//   ((1 - phi x)/(1 - 2 phi x + beta x^2), x^2/(1 - 2 phi x + beta x^2)),
//   (x/(1 - 2 phi x + beta x^2),          x^2/(1 - 2 phi x + beta x^2)).
std::pair<Poly, Poly> type2_row_polys(const Rational& phi, const Rational& beta, int n);

// Closed forms t_n = J_n ttilde_n(phi, beta, x^2), u_n = J_{n-1}
// utilde_n(phi, beta, x^2); the independent route for tests.
std::pair<Poly, Poly> type2_tu_closed(const Rational& phi, const Rational& beta, int n);

// b^(2n) - 2 t_n b^n + (beta x^2 - 1)^n = 0 through the context order.
bool type2_quadratic_check(const TypeTwoContext& ctx, int n);

// Product forms of the row polynomials,
//   ttilde_n = p_n prod (x + (phi^2 - beta cos^2)/cos^2)  over odd angles,
//   utilde_n = r_n prod (x + (phi^2 - beta cos^2)/cos^2)  over m pi/n,
// with parity-dependent leading constants p_n = 1 | n phi, r_n = n phi | 1,
// verified numerically against the exact rows.
bool type2_root_check(const Rational& phi, const Rational& beta, int n, double tol);

}  // namespace riordan
