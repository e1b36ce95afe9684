#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "riordan/matrix.hpp"
#include "riordan/poly.hpp"
#include "riordan/riordan_pair.hpp"
#include "riordan/series.hpp"

namespace riordan {

// The Fibonacci bases of the series space (A-kinds, columns are series)
// and the polynomial space (B-kinds, columns are exact polynomials):
//   A: even columns from ((2+x)/(1+x), x^2/(1+x)),
//      odd columns from (x/(1+x), x^2/(1+x));
//   B: even columns (x + x^2)^n, odd columns (1+2x)(x + x^2)^n;
//   A_(phi,beta): columns (1 + (phi/2) x) x^(2n) / (1 + phi x + beta x^2)^(n+1)
//                 and x^(2n+1) / (1 + phi x + beta x^2)^(n+1);
//   B_(phi,beta): columns (beta + phi x + x^2)^n and
//                 (phi/2 + x)(beta + phi x + x^2)^n;
//   reduced kinds are the general kinds at (phi, beta) = (1, 0), equal to
//   A D1 and B D2 for the halving diagonals D1, D2.
enum class BasisKind { a_classic, b_classic, a_general, b_general, a_reduced, b_reduced };

class BasisMatrix {
public:
    BasisKind kind() const { return kind_; }
    const Rational& phi() const { return phi_; }
    const Rational& beta() const { return beta_; }
    int n_cols() const;
    int order() const { return order_; }  // column truncation order (A-kinds)
    bool a_side() const;

    const Series& series_column(int k) const;  // A-kinds
    const Poly& poly_column(int k) const;      // B-kinds

    Rational entry(int n, int k) const;
    Matrix grid(int n_rows) const;  // dense n_rows x n_cols block

    // Image of a series under the transformation (A-kinds only; apply_B
    // covers the polynomial side). Exact through min(order, order(a)),
    // which must be below n_cols.
    Series apply(const Series& a) const;

    friend BasisMatrix build_basis(BasisKind kind, const Rational& phi, const Rational& beta,
                                   int n_cols, int order);

private:
    BasisMatrix() = default;

    BasisKind kind_ = BasisKind::a_classic;
    Rational phi_, beta_;
    int order_ = 0;
    std::vector<Series> series_cols_;
    std::vector<Poly> poly_cols_;
};

// phi and beta are ignored for the classic and reduced kinds.
BasisMatrix build_basis(BasisKind kind, const Rational& phi, const Rational& beta,
                        int n_cols, int order);

// Scale even-index and odd-index coefficients; the diagonals D1 = (1/2, 1)
// and D2 = (1, 1/2) of the reduced bases.
Series diag_scale(const Series& a, const Rational& even_scale, const Rational& odd_scale);

// Duality pairing (a | c) = sum a_n c_n; finite because c is a polynomial.
// Requires order(a) >= degree(c).
Rational pairing(const Series& a, const Poly& c);

// Pairing of basis columns equals 2 delta_{n,m} (classic) or delta_{n,m}
// (general/reduced) for all n, m <= n_max, plus the equivalent block
// statement scale * A^(-1) = B^T on the leading (n_max+1)-block.
// a_kind selects the pair: pass the A-side kind.
bool duality_check(BasisKind a_kind, const Rational& phi, const Rational& beta,
                   int n_max, int order);

// Closed row formulas (Theorem 3 and its generalization):
//   [n,->]A           = x^n (L_{-n}(1/x) + F_{-n}(1/x)),
//   [n,->]B           = x^n (L_{n+1}(x) + F_{n+1}(x)),
//   [n,->]A_(phi,beta) combines L_{-n}, F_{-n} with powers of x^2 - beta,
//   [n,->]B_(phi,beta) combines L_{n+1}, F_{n+1} with powers of
//                      1/(1 - beta x^2), truncated at the given order.
// Surviving odd radical powers throw ParityViolation.
Poly row_formula(BasisKind kind, const Rational& phi, const Rational& beta, int n, int order);

// B acting on a series: Ba = a1(x + x^2) + (1 + 2x) a2(x + x^2) for
// a = a1(x^2) + x a2(x^2). Exact through min(order, (order(a) - 1)/2):
// coefficient n of the image reads a through coefficient 2n+1.
Series apply_B(const Series& a, int order);

// B annihilates c(x^2)(sqrt(1 + 4x^2) - x); checked through the given
// order (c must have at least that order).
bool kernel_check(const Series& c, int order);

// The two right inverses of B:
//   B1^(-1) = (1, (sqrt(1+4x^2) - 1)/2),
//   B2^(-1) = (x/sqrt(1+4x^2), (sqrt(1+4x^2) - 1)/2),
// returned as (stretched) Riordan pairs at the given order.
RiordanPair right_inverse_B(int which, int order);

// Coordinates of a in the basis B along the chosen right inverse:
// apply_B(coordinates_in_B(a, which, N)) agrees with a through N.
// Requires order(a) >= order. Coordinates are not unique; the two routes
// differ by a kernel element.
Series coordinates_in_B(const Series& a, int which, int order);

// Theorem 4 group law, both sides:
//   A_(phi,b1) A_(0,b2) = A_(phi,b1+b2),  B_(phi,b1) B_(0,b2) = B_(phi,b1+b2),
// checked on n_cols columns (exactly for B, through the order for A).
bool theorem4_check(const Rational& phi, const Rational& beta1, const Rational& beta2,
                    int n_cols, int order);

struct RelationReport {
    std::vector<std::pair<std::string, bool>> items;
    bool ok() const;
};

// The Pascal-power embeddings P^phi = A_(-2phi,phi^2), (P^phi)^T =
// B_(2phi,phi^2), the transpose relation (A_(0,beta))^T = B_(0,-beta),
// and the pseudo-eigenbasis relations for classic and sampled general
// bases, all entrywise through n_rows.
RelationReport algebraic_relations_check(int n_rows, std::uint64_t seed);

// Example-3 identities: (phi + x)^n against the L_n/F_n radical form
// (exact polynomial identity) and 1/(1 - phi x)^(n+1) against the
// L_{n+1}/F_{n+1} form (series identity through the order).
bool example3_check(const Rational& phi, int n, int order);

// Float verification of the golden-ratio images of the classic bases,
// e.g. A (1 + sqrt5 x)/(1 - x^2) -> 2 (1, 1/alpha, 1/alpha^2, ...),
// through n_coeffs coefficients.
bool golden_ratio_check(int n_coeffs, double tol);

}  // namespace riordan
