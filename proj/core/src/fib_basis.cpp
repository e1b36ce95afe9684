#include "riordan/fib_basis.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "riordan/errors.hpp"
#include "riordan/families.hpp"
#include "riordan/sampling.hpp"

namespace riordan {

int BasisMatrix::n_cols() const {
    return static_cast<int>(a_side() ? series_cols_.size() : poly_cols_.size());
}

bool BasisMatrix::a_side() const {
    return kind_ == BasisKind::a_classic || kind_ == BasisKind::a_general ||
           kind_ == BasisKind::a_reduced;
}

const Series& BasisMatrix::series_column(int k) const {
    if (!a_side()) throw std::invalid_argument("series_column: polynomial-side basis");
    return series_cols_.at(static_cast<std::size_t>(k));
}

const Poly& BasisMatrix::poly_column(int k) const {
    if (a_side()) throw std::invalid_argument("poly_column: series-side basis");
    return poly_cols_.at(static_cast<std::size_t>(k));
}

Rational BasisMatrix::entry(int n, int k) const {
    if (a_side()) {
        if (n > order_) throw InsufficientOrder("BasisMatrix::entry: row beyond order");
        return series_column(k).coeff(n);
    }
    return poly_column(k).coeff(n);
}

Matrix BasisMatrix::grid(int n_rows) const {
    if (a_side() && n_rows - 1 > order_)
        throw InsufficientOrder("BasisMatrix::grid: order below n_rows - 1");
    Matrix m(n_rows, n_cols());
    for (int k = 0; k < n_cols(); ++k)
        for (int n = 0; n < n_rows; ++n) m.at(n, k) = entry(n, k);
    return m;
}

Series BasisMatrix::apply(const Series& a) const {
    if (!a_side())
        throw std::invalid_argument("BasisMatrix::apply: use apply_B on the polynomial side");
    const int r_order = std::min(order_, a.order());
    if (n_cols() <= r_order)
        throw InsufficientOrder("BasisMatrix::apply: not enough columns");
    Series r(r_order);
    for (int k = 0; k <= r_order; ++k) {
        if (a.coeff(k).is_zero()) continue;
        r = r + a.coeff(k) * series_column(k).truncated(r_order);
    }
    return r;
}

BasisMatrix build_basis(BasisKind kind, const Rational& phi, const Rational& beta,
                        int n_cols, int order) {
    if (n_cols < 1) throw std::invalid_argument("build_basis: n_cols must be >= 1");
    BasisMatrix m;
    m.kind_ = kind;
    m.order_ = order;

    // The reduced bases are the general ones at (1, 0); classics carry no
    // parameters at all.
    const bool general = kind == BasisKind::a_general || kind == BasisKind::b_general;
    m.phi_ = general ? phi : Rational(1);
    m.beta_ = general ? beta : Rational(0);

    switch (kind) {
        case BasisKind::a_classic: {
            const Series dinv = inverse(Series::from_poly(Poly({Rational(1), Rational(1)}), order));
            const Series f_even = Series::from_poly(Poly({Rational(2), Rational(1)}), order) * dinv;
            const Series f_odd = shift_up(dinv, 1).truncated(order);
            const Series g = shift_up(dinv, 2).truncated(order);
            Series gp = Series::constant(Rational(1), order);
            for (int k = 0; k < n_cols; ++k) {
                m.series_cols_.push_back((k % 2 == 0 ? f_even : f_odd) * gp);
                if (k % 2 == 1) gp = gp * g;
            }
            break;
        }
        case BasisKind::a_general:
        case BasisKind::a_reduced: {
            const Rational p = m.phi_, b = m.beta_;
            const Series dinv =
                inverse(Series::from_poly(Poly({Rational(1), p, b}), order));
            const Series numer =
                Series::from_poly(Poly({Rational(1), p * Rational(1, 2)}), order);
            Series dp = dinv;  // dinv^(n+1)
            for (int k = 0; k < n_cols; ++k) {
                const Series shifted = shift_up(dp, k).truncated(order);
                m.series_cols_.push_back(k % 2 == 0 ? numer * shifted : shifted);
                if (k % 2 == 1) dp = dp * dinv;
            }
            break;
        }
        case BasisKind::b_classic: {
            const Poly base({Rational(0), Rational(1), Rational(1)});  // x + x^2
            const Poly odd_factor({Rational(1), Rational(2)});         // 1 + 2x
            Poly bp = Poly::constant(Rational(1));
            for (int k = 0; k < n_cols; ++k) {
                m.poly_cols_.push_back(k % 2 == 0 ? bp : odd_factor * bp);
                if (k % 2 == 1) bp = bp * base;
            }
            break;
        }
        case BasisKind::b_general:
        case BasisKind::b_reduced: {
            const Rational p = m.phi_, b = m.beta_;
            const Poly base({b, p, Rational(1)});                       // beta + phi x + x^2
            const Poly odd_factor({p * Rational(1, 2), Rational(1)});   // phi/2 + x
            Poly bp = Poly::constant(Rational(1));
            for (int k = 0; k < n_cols; ++k) {
                m.poly_cols_.push_back(k % 2 == 0 ? bp : odd_factor * bp);
                if (k % 2 == 1) bp = bp * base;
            }
            break;
        }
    }
    return m;
}

Series diag_scale(const Series& a, const Rational& even_scale, const Rational& odd_scale) {
    std::vector<Rational> c(static_cast<std::size_t>(a.order()) + 1);
    for (int k = 0; k <= a.order(); ++k)
        c[static_cast<std::size_t>(k)] = (k % 2 == 0 ? even_scale : odd_scale) * a.coeff(k);
    return Series(std::move(c));
}

Rational pairing(const Series& a, const Poly& c) {
    if (a.order() < c.degree()) throw InsufficientOrder("pairing: order(a) < degree(c)");
    Rational acc(0);
    for (int n = 0; n <= c.degree(); ++n) acc += a.coeff(n) * c.coeff(n);
    return acc;
}

namespace {

BasisKind b_side_of(BasisKind a_kind) {
    switch (a_kind) {
        case BasisKind::a_classic: return BasisKind::b_classic;
        case BasisKind::a_general: return BasisKind::b_general;
        case BasisKind::a_reduced: return BasisKind::b_reduced;
        default: throw std::invalid_argument("duality_check: pass the A-side kind");
    }
}

}  // namespace

bool duality_check(BasisKind a_kind, const Rational& phi, const Rational& beta,
                   int n_max, int order) {
    if (order < n_max) throw InsufficientOrder("duality_check: order below n_max");
    const Rational scale(a_kind == BasisKind::a_classic ? 2 : 1);
    const BasisMatrix a = build_basis(a_kind, phi, beta, n_max + 1, order);
    const BasisMatrix b = build_basis(b_side_of(a_kind), phi, beta, n_max + 1, order);

    for (int n = 0; n <= n_max; ++n)
        for (int m = 0; m <= n_max; ++m) {
            const Rational expected = n == m ? scale : Rational(0);
            if (pairing(a.series_column(n), b.poly_column(m)) != expected) return false;
        }

    // Equivalent block statement: scale * A^(-1) = B^T.
    const Matrix ablock = a.grid(n_max + 1);
    const Matrix bblock = b.grid(n_max + 1);
    return scale * ablock.lower_inverse() == bblock.transposed();
}

namespace {

// sum_j p_j scale^j u^((base-j)/2): the polynomial-side radical combination.
Poly radical_poly_sum(const Poly& p, const Rational& scale, const Poly& u, int base) {
    Poly acc;
    for (int j = 0; j <= p.degree(); ++j) {
        if (p.coeff(j).is_zero()) continue;
        const int e = base - j;
        if (e < 0 || e % 2 != 0)
            throw ParityViolation("row_formula: odd radical power survived");
        acc = acc + (p.coeff(j) * scale.pow(j)) * pow(u, e / 2);
    }
    return acc;
}

// sum_j p_j scale^j x^j rho^((base+j)/2) truncated at the given order.
Series radical_series_sum(const Poly& p, const Rational& scale, const Series& rho,
                          int base, int order) {
    std::vector<Series> rho_pow{Series::constant(Rational(1), order)};
    Series acc(order);
    for (int j = 0; j <= p.degree(); ++j) {
        if (p.coeff(j).is_zero()) continue;
        const int e2 = base + j;
        if (e2 < 0 || e2 % 2 != 0)
            throw ParityViolation("row_formula: odd radical power survived");
        const int e = e2 / 2;
        while (static_cast<int>(rho_pow.size()) <= e) rho_pow.push_back(rho_pow.back() * rho);
        acc = acc + (p.coeff(j) * scale.pow(j)) *
                        shift_up(rho_pow[static_cast<std::size_t>(e)], j).truncated(order);
    }
    return acc;
}

}  // namespace

Poly row_formula(BasisKind kind, const Rational& phi, const Rational& beta, int n, int order) {
    const Rational half(1, 2);
    switch (kind) {
        case BasisKind::a_classic:
            return reverse_J(family_poly(Family::L, -n), n) +
                   reverse_J(family_poly(Family::F, -n), n);
        case BasisKind::b_classic:
            return Poly::monomial(n) *
                   (family_poly(Family::L, n + 1) + family_poly(Family::F, n + 1));
        case BasisKind::a_general:
        case BasisKind::a_reduced: {
            const Rational p = kind == BasisKind::a_reduced ? Rational(1) : phi;
            const Rational b = kind == BasisKind::a_reduced ? Rational(0) : beta;
            const Poly u({-b, Rational(0), Rational(1)});  // x^2 - beta
            const Poly lneg = family_poly(Family::L, -n);
            const Poly fneg = family_poly(Family::F, -n);
            Poly r = half * radical_poly_sum(lneg, p, u, n);
            if (!fneg.is_zero()) r = r + Poly::x() * radical_poly_sum(fneg, p, u, n - 1);
            return r;
        }
        case BasisKind::b_general:
        case BasisKind::b_reduced: {
            const Rational p = kind == BasisKind::b_reduced ? Rational(1) : phi;
            const Rational b = kind == BasisKind::b_reduced ? Rational(0) : beta;
            const Series rho =
                inverse(Series::from_poly(Poly({Rational(1), Rational(0), -b}), order));
            const Poly lp = family_poly(Family::L, n + 1);
            const Poly fp = family_poly(Family::F, n + 1);
            const Series s = half * radical_series_sum(lp, p, rho, n + 1, order) +
                             radical_series_sum(fp, p, rho, n + 2, order);
            return shift_up(s, n).truncated(order).poly_prefix(order);
        }
    }
    throw std::invalid_argument("row_formula: unknown kind");
}

Series apply_B(const Series& a, int order) {
    if (a.order() < 1) throw InsufficientOrder("apply_B: order(a) must be >= 1");
    const int r_order = std::min(order, (a.order() - 1) / 2);
    const auto [a1, a2] = even_odd_split(a);
    const Series w = Series::from_poly(Poly({Rational(0), Rational(1), Rational(1)}), r_order);
    const Series term1 = compose(a1.truncated(std::min(a1.order(), r_order)), w);
    const Series term2 =
        Series::from_poly(Poly({Rational(1), Rational(2)}), r_order) *
        compose(a2.truncated(std::min(a2.order(), r_order)), w);
    return term1 + term2;
}

bool kernel_check(const Series& c, int order) {
    if (c.order() < order) throw InsufficientOrder("kernel_check: order(c) below check order");
    const int work = 2 * order + 1;
    const Series cs = stretch2(c.truncated(order));  // order 2*order + 1
    const Series root =
        sqrt(Series::from_poly(Poly({Rational(1), Rational(0), Rational(4)}), work));
    const Series u = root - Series::x(work);
    return apply_B(cs * u, order).is_zero();
}

RiordanPair right_inverse_B(int which, int order) {
    if (which != 1 && which != 2)
        throw std::invalid_argument("right_inverse_B: which must be 1 or 2");
    const Series root =
        sqrt(Series::from_poly(Poly({Rational(1), Rational(0), Rational(4)}), order));
    const Series g =
        Rational(1, 2) * (root - Series::constant(Rational(1), order));
    const Series f = which == 1 ? Series::constant(Rational(1), order)
                                : shift_up(inverse(root), 1).truncated(order);
    return RiordanPair(f, g);
}

Series coordinates_in_B(const Series& a, int which, int order) {
    if (a.order() < order) throw InsufficientOrder("coordinates_in_B: order(a) below order");
    return pair_apply(right_inverse_B(which, order), a.truncated(order));
}

bool theorem4_check(const Rational& phi, const Rational& beta1, const Rational& beta2,
                    int n_cols, int order) {
    // A-side: column n of the product is sum_k [x^k](A_(0,b2) x^n) * (A_(phi,b1) x^k).
    const BasisMatrix left = build_basis(BasisKind::a_general, phi, beta1, order + 1, order);
    const BasisMatrix right = build_basis(BasisKind::a_general, Rational(0), beta2, n_cols, order);
    const BasisMatrix expect =
        build_basis(BasisKind::a_general, phi, beta1 + beta2, n_cols, order);
    for (int n = 0; n < n_cols; ++n) {
        Series col(order);
        const Series& rc = right.series_column(n);
        for (int k = 0; k <= order; ++k) {
            if (rc.coeff(k).is_zero()) continue;
            col = col + rc.coeff(k) * left.series_column(k);
        }
        if (!(col == expect.series_column(n))) return false;
    }

    // B-side: the same sum is finite because the columns are polynomials.
    const BasisMatrix bleft = build_basis(BasisKind::b_general, phi, beta1, n_cols, order);
    const BasisMatrix bright = build_basis(BasisKind::b_general, Rational(0), beta2, n_cols, order);
    const BasisMatrix bexpect =
        build_basis(BasisKind::b_general, phi, beta1 + beta2, n_cols, order);
    for (int n = 0; n < n_cols; ++n) {
        Poly col;
        const Poly& rc = bright.poly_column(n);
        for (int k = 0; k <= rc.degree(); ++k) {
            if (rc.coeff(k).is_zero()) continue;
            if (k >= n_cols) return false;  // would need more left columns than exist
            col = col + rc.coeff(k) * bleft.poly_column(k);
        }
        if (!(col == bexpect.poly_column(n))) return false;
    }
    return true;
}

bool RelationReport::ok() const {
    for (const auto& [name, passed] : items)
        if (!passed) return false;
    return true;
}

namespace {

Poly flip_odd_signs(const Poly& c) {
    std::vector<Rational> r(static_cast<std::size_t>(std::max(c.degree(), 0)) + 1);
    for (int k = 0; k <= c.degree(); ++k)
        r[static_cast<std::size_t>(k)] = k % 2 == 0 ? c.coeff(k) : -c.coeff(k);
    return Poly(std::move(r));
}

// (P^shift)^T B == M B M columnwise: col_n(x + shift) == (-1)^n col_n(-x).
bool b_basis_shift_eigen(const BasisMatrix& b, const Rational& shift) {
    for (int n = 0; n < b.n_cols(); ++n) {
        const Poly& col = b.poly_column(n);
        Poly rhs = flip_odd_signs(col);
        if (n % 2 == 1) rhs = -rhs;
        if (!(shift_polynomial(col, shift) == rhs)) return false;
    }
    return true;
}

}  // namespace

RelationReport algebraic_relations_check(int n_rows, std::uint64_t seed) {
    RelationReport report;
    std::mt19937_64 rng(seed);
    const int order = n_rows - 1;

    {  // classic pseudo-eigen relations: P A = M A M and (P^-1)^T B = M B M
        const BasisMatrix a =
            build_basis(BasisKind::a_classic, Rational(0), Rational(0), n_rows, order);
        report.items.emplace_back(
            "P.A = M.A.M (classic)",
            pseudo_eigen_check(a.grid(n_rows), Rational(1), MulSide::left));
        const BasisMatrix b =
            build_basis(BasisKind::b_classic, Rational(0), Rational(0), n_rows, order);
        report.items.emplace_back("(P^-1)^T.B = M.B.M (classic)",
                                  b_basis_shift_eigen(b, Rational(-1)));
    }

    for (int i = 0; i < 3; ++i) {  // Pascal-power embeddings
        const Rational phi = random_nonzero_rational(rng, 6, 4);
        const Matrix pascal = pair_to_matrix(pascal_power(phi, order), n_rows);
        const BasisMatrix a = build_basis(BasisKind::a_general, Rational(-2) * phi, phi * phi,
                                          n_rows, order);
        report.items.emplace_back("A_(-2phi,phi^2) = P^phi (phi=" + phi.str() + ")",
                                  a.grid(n_rows) == pascal);
        const BasisMatrix b = build_basis(BasisKind::b_general, Rational(2) * phi, phi * phi,
                                          n_rows, order);
        report.items.emplace_back("B_(2phi,phi^2) = (P^phi)^T (phi=" + phi.str() + ")",
                                  b.grid(n_rows) == pascal.transposed());
    }

    for (int i = 0; i < 3; ++i) {  // (A_(0,beta))^T = B_(0,-beta)
        const Rational beta = random_rational(rng, 6, 4);
        const BasisMatrix a = build_basis(BasisKind::a_general, Rational(0), beta, n_rows, order);
        const BasisMatrix b = build_basis(BasisKind::b_general, Rational(0), -beta, n_rows, order);
        report.items.emplace_back("(A_(0,b))^T = B_(0,-b) (b=" + beta.str() + ")",
                                  a.grid(n_rows).transposed() == b.grid(n_rows));
    }

    {  // A_(0,0) is the identity transformation
        const BasisMatrix a =
            build_basis(BasisKind::a_general, Rational(0), Rational(0), n_rows, order);
        report.items.emplace_back("A_(0,0) = I", a.grid(n_rows) == Matrix::identity(n_rows));
    }

    for (int i = 0; i < 2; ++i) {  // sampled general pseudo-eigen relations
        const Rational phi = random_rational(rng, 6, 4);
        const Rational beta = random_rational(rng, 6, 4);
        const BasisMatrix a = build_basis(BasisKind::a_general, phi, beta, n_rows, order);
        report.items.emplace_back(
            "P^phi.A_(phi,b) = M.A.M (phi=" + phi.str() + ", b=" + beta.str() + ")",
            pseudo_eigen_check(a.grid(n_rows), phi, MulSide::left));
        const BasisMatrix b = build_basis(BasisKind::b_general, phi, beta, n_rows, order);
        report.items.emplace_back(
            "(P^-phi)^T.B_(phi,b) = M.B.M (phi=" + phi.str() + ", b=" + beta.str() + ")",
            b_basis_shift_eigen(b, -phi));
    }

    return report;
}

bool example3_check(const Rational& phi, int n, int order) {
    const Rational half(1, 2);
    const Rational two_phi = Rational(2) * phi;

    // (phi + x)^n as the L_n/F_n combination in powers of x^2 - phi^2.
    const Poly u({-(phi * phi), Rational(0), Rational(1)});
    const Poly lp = family_poly(Family::L, n);
    const Poly fp = family_poly(Family::F, n);
    Poly rhs = half * radical_poly_sum(lp, two_phi, u, n);
    if (!fp.is_zero()) rhs = rhs + Poly::x() * radical_poly_sum(fp, two_phi, u, n - 1);
    if (!(pow(Poly({phi, Rational(1)}), n) == rhs)) return false;

    // 1/(1 - phi x)^(n+1) as the L_{n+1}/F_{n+1} combination in powers of
    // 1/(1 - phi^2 x^2), through the given order.
    const Series rho =
        inverse(Series::from_poly(Poly({Rational(1), Rational(0), -(phi * phi)}), order));
    const Series rhs2 =
        half * radical_series_sum(family_poly(Family::L, n + 1), two_phi, rho, n + 1, order) +
        radical_series_sum(family_poly(Family::F, n + 1), two_phi, rho, n + 2, order);
    const Series lhs2 =
        pow(inverse(Series::from_poly(Poly({Rational(1), -phi}), order)), n + 1);
    return lhs2 == rhs2;
}

bool golden_ratio_check(int n_coeffs, double tol) {
    const int order = n_coeffs;
    const double sqrt5 = std::sqrt(5.0);
    const double alpha = (1.0 + sqrt5) / 2.0;

    const Matrix a_grid =
        build_basis(BasisKind::a_classic, Rational(0), Rational(0), order + 1, order)
            .grid(order + 1);
    const Matrix b_grid =
        build_basis(BasisKind::b_classic, Rational(0), Rational(0), 2 * order + 2, order)
            .grid(order + 1);

    const auto image = [](const Matrix& m, const std::vector<double>& v) {
        std::vector<double> out(static_cast<std::size_t>(m.rows()), 0.0);
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c)
                out[static_cast<std::size_t>(r)] +=
                    m.at(r, c).to_double() * v[static_cast<std::size_t>(c)];
        return out;
    };
    const auto alternating = [](int count, double even, double odd) {
        std::vector<double> v(static_cast<std::size_t>(count));
        for (int k = 0; k < count; ++k) v[static_cast<std::size_t>(k)] = k % 2 == 0 ? even : odd;
        return v;
    };

    // A (1 + sqrt5 x)/(1 - x^2) -> 2 alpha^-n
    const auto img1 = image(a_grid, alternating(order + 1, 1.0, sqrt5));
    // B (sqrt5 + x)/(1 - x^2) -> 2 alpha^(n+1)
    const auto img2 = image(b_grid, alternating(2 * order + 2, sqrt5, 1.0));
    // A (1 - sqrt5 x)/(1 - x^2) -> 2 (-alpha)^n
    const auto img3 = image(a_grid, alternating(order + 1, 1.0, -sqrt5));
    // B (-sqrt5 + x)/(1 - x^2) -> 2 (-1)^(n+1) alpha^-(n+1)
    const auto img4 = image(b_grid, alternating(2 * order + 2, -sqrt5, 1.0));

    for (int m = 0; m <= order; ++m) {
        const auto i = static_cast<std::size_t>(m);
        const double sign = m % 2 == 0 ? 1.0 : -1.0;
        if (std::abs(img1[i] - 2.0 * std::pow(alpha, -m)) >= tol) return false;
        if (std::abs(img2[i] - 2.0 * std::pow(alpha, m + 1)) >= tol) return false;
        if (std::abs(img3[i] - 2.0 * sign * std::pow(alpha, m)) >= tol) return false;
        if (std::abs(img4[i] + 2.0 * sign * std::pow(alpha, -(m + 1))) >= tol) return false;
    }
    return true;
}

}  // namespace riordan
