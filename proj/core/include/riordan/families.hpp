#pragma once

#include <optional>
#include <string_view>

#include "riordan/poly.hpp"
#include "riordan/series.hpp"

namespace riordan {

// The recurrence families p_n = x p_{n-1} - beta p_{n-2}:
//   D (Dickson, seeds 2, x) and E (seeds 1, x) carry an explicit beta;
//   C = D(., 1) and S = E(., 1) are the modified Chebyshev polynomials;
//   L = D(., -1) are Lucas polynomials; F_n = E_{n-1}(., -1) with F_0 = 0
//   are Fibonacci polynomials.
enum class Family { C, S, D, E, L, F };

std::optional<Family> family_from_string(std::string_view name);
std::string_view family_name(Family tag);

// Exact polynomial by the three-term recurrence. beta is required for D/E
// and must be omitted otherwise. Negative n follows the reflection rules
// L_{-n} = (-1)^n L_n, F_{-n} = (-1)^(n-1) F_n, S_{-n} = -S_{n-2} (so
// S_{-1} = 0); C, D, E have no negative-index convention and throw
// UnsupportedIndex.
Poly family_poly(Family tag, long n, std::optional<Rational> beta = std::nullopt);

// Row identity against the Riordan realization: D_n(x,b) is row n of
// ((1-b x^2)/(1+b x^2), x/(1+b x^2)) for n > 0, E_n(x,b) is row n of
// (1/(1+b x^2), x/(1+b x^2)). C/S/L/F map to their implied beta; for a
// D-kind tag n = 0 is vacuously true (row 0 is 1, not D_0 = 2).
bool family_row_check(Family tag, int n, std::optional<Rational> beta = std::nullopt);

// J_n: c(x) -> x^n c(1/x), reversing the coefficients of a polynomial of
// degree <= n (throws DegreeTooHigh above that).
Poly reverse_J(const Poly& c, int n);

enum class SequenceKind { lucas, fibonacci };

// Generating functions of the generalized Lucas/Fibonacci numbers:
// (2 - phi x)/(1 - phi x + beta x^2) resp. x/(1 - phi x + beta x^2);
// coefficient n is D_n(phi, beta) resp. E_{n-1}(phi, beta).
Series family_gf(SequenceKind kind, const Rational& phi, const Rational& beta, int order);

// Numeric verification of the closed product forms
//   D_n(x,b) = prod_m (x - 2 sqrt(b) cos((2m-1)pi/2n)),
//   E_n(x,b) = prod_m (x - 2 sqrt(b) cos(m pi/(n+1))),
// by evaluating the exact polynomial at each root and by expanding the
// product numerically. beta must be >= 0 (and omitted for C/S); n >= 1.
bool root_form_check(Family tag, int n, std::optional<Rational> beta, double tol);

// The four cosine/sine product identities with their parity-dependent
// right-hand sides 1/2^(n-1) and n/2^(n-1).
bool trig_product_check(int n, double tol);

}  // namespace riordan
