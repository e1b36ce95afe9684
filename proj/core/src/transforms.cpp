#include "riordan/transforms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/families.hpp"
#include "riordan/riordan_pair.hpp"

namespace riordan {

namespace {

// Extract the first deg_bound+1 coefficients as a polynomial; the tail
// must vanish through the whole truncation.
Poly exact_poly_part(const Series& s, int deg_bound, const char* what) {
    for (int k = deg_bound + 1; k <= s.order(); ++k)
        if (!s.coeff(k).is_zero()) throw NonPolynomialResidue(what);
    return s.poly_prefix(std::min(deg_bound, s.order()));
}

}  // namespace

TypeOneContext type1_context(const Rational& phi, const Rational& beta, int order) {
    const Poly disc({Rational(1), Rational(2) * phi, phi * phi - Rational(4) * beta});
    const Series sqrt_disc = sqrt(Series::from_poly(disc, order));
    const Series b = Rational(1, 2) *
        (Series::from_poly(Poly({Rational(1), phi}), order) + sqrt_disc);
    TypeOneContext ctx{phi, beta, order, b, inverse(b), sqrt_disc, inverse(sqrt_disc)};

    // b is the companion series of a = 1/(1 - phi x + beta x^2).
    const Series a = inverse(Series::from_poly(Poly({Rational(1), -phi, beta}), order));
    if (!(companion_b(a) == ctx.b))
        throw std::logic_error("type1_context: companion cross-check failed");
    // 1 - x (log b)' = 1/sqrt_disc.
    const Series two = Series::constant(Rational(2), order);
    if (!(two - log_deriv_factor(ctx.b) == ctx.log_factor))
        throw std::logic_error("type1_context: log-factor cross-check failed");
    return ctx;
}

std::pair<Poly, Poly> type1_cs(const TypeOneContext& ctx, int n) {
    if (2 * n > ctx.order) throw InsufficientOrder("type1_cs: 2n exceeds context order");
    const Series bn = pow(ctx.b, n);
    const Series w = ctx.beta.pow(n) * shift_up(pow(ctx.b_inv, n), 2 * n).truncated(ctx.order);
    const Poly c = exact_poly_part(bn + w, n, "type1_cs: c_n tail is nonzero");
    const Poly s = exact_poly_part((bn - w) * ctx.log_factor, std::max(n - 1, 0),
                                   "type1_cs: s_n tail is nonzero");
    return {c, s};
}

std::pair<Poly, Poly> type1_cs_closed(const Rational& phi, const Rational& beta, int n) {
    const Poly c = reverse_J(shift_polynomial(family_poly(Family::D, n, beta), phi), n);
    const Poly s = n == 0
        ? Poly()
        : reverse_J(shift_polynomial(family_poly(Family::E, n - 1, beta), phi), n - 1);
    return {c, s};
}

bool type1_quadratic_check(const TypeOneContext& ctx, int n) {
    if (2 * n > ctx.order) throw InsufficientOrder("type1_quadratic_check: 2n exceeds order");
    const auto [c, s] = type1_cs(ctx, n);
    const Series lhs = pow(ctx.b, 2 * n) -
        Series::from_poly(c, ctx.order) * pow(ctx.b, n) +
        Series::from_poly(Poly::monomial(2 * n, ctx.beta.pow(n)), ctx.order);
    return lhs.is_zero();
}

Series catalan_x2(int order) {
    const Series w = sqrt(Series::from_poly(Poly({Rational(1), Rational(0), Rational(-4)}),
                                            order + 2));
    return Rational(1, 2) * shift_down(Series::constant(Rational(1), order + 2) - w, 2);
}

namespace {

// x^e * S_j(1/x) as a polynomial; the reflection rules make S_j finite for
// every integer j and e >= deg S_j holds at every call site below.
Poly monomial_times_reversed_s(int e, long j) {
    const Poly s = family_poly(Family::S, j);
    if (s.is_zero()) return Poly();
    if (e < s.degree() || e < 0)
        throw std::logic_error("catalan_power_check: reversal exponent too small");
    return reverse_J(s, e);
}

}  // namespace

bool catalan_power_check(long k, int order) {
    const long ak = k < 0 ? -k : k;
    if (order < 2 * ak + 4) throw InsufficientOrder("catalan_power_check: order < 2|k| + 4");
    const Series c2 = catalan_x2(order);
    const Series ck = pow(c2, k);
    const int e = k >= 1 ? static_cast<int>(2 * k - 2) : 0;

    const Series lhs = shift_up(ck, e).truncated(order);
    const Series term1 = Series::from_poly(monomial_times_reversed_s(e - static_cast<int>(k), k - 2),
                                           order);
    const Series term2 = Series::from_poly(monomial_times_reversed_s(e - static_cast<int>(k) + 1, k - 1),
                                           order);
    return lhs == -term1 + term2 * c2;
}

TypeTwoContext type2_context(const Rational& phi, const Rational& beta, int order) {
    const Poly disc({Rational(1), Rational(0), phi * phi - beta});
    const Series sqrt_disc = sqrt(Series::from_poly(disc, order));
    const Series b = Series::from_poly(Poly({Rational(0), phi}), order) + sqrt_disc;
    TypeTwoContext ctx{phi, beta, order, b, inverse(b), sqrt_disc, inverse(b * sqrt_disc)};

    // (beta x^2 - 1) b^(-1) = phi x - sqrt_disc.
    const Series lhs = Series::from_poly(Poly({Rational(-1), Rational(0), beta}), order) * ctx.b_inv;
    const Series rhs = Series::from_poly(Poly({Rational(0), phi}), order) - sqrt_disc;
    if (!(lhs == rhs))
        throw std::logic_error("type2_context: b^(-1) cross-check failed");
    // 1 - x (log b)' = 1/(b sqrt_disc).
    const Series two = Series::constant(Rational(2), order);
    if (!(two - log_deriv_factor(ctx.b) == ctx.log_factor))
        throw std::logic_error("type2_context: log-factor cross-check failed");
    return ctx;
}

std::pair<Poly, Poly> type2_tu(const TypeTwoContext& ctx, int n) {
    if (2 * n > ctx.order) throw InsufficientOrder("type2_tu: 2n exceeds context order");
    const Series bn = pow(ctx.b, n);
    const Poly q_poly = pow(Poly({Rational(-1), Rational(0), ctx.beta}), n);
    const Series w = Series::from_poly(q_poly, ctx.order) * pow(ctx.b_inv, n);
    const Rational half(1, 2);
    const Poly t = exact_poly_part(half * (bn + w), n, "type2_tu: t_n tail is nonzero");
    const Series sd_inv = inverse(ctx.sqrt_disc);
    const Poly u = exact_poly_part(half * (bn - w) * sd_inv, std::max(n - 1, 0),
                                   "type2_tu: u_n tail is nonzero");
    return {t, u};
}

std::pair<Poly, Poly> type2_row_polys(const Rational& phi, const Rational& beta, int n) {
    const int order = std::max(n, 1);
    const Poly denom({Rational(1), Rational(-2) * phi, beta});
    const Series dinv = inverse(Series::from_poly(denom, order));
    const Series g = shift_up(dinv, 2).truncated(order);
    const Series f_t = Series::from_poly(Poly({Rational(1), -phi}), order) * dinv;
    const Series f_u = shift_up(dinv, 1).truncated(order);
    return {row_gf(RiordanPair(f_t, g), n), row_gf(RiordanPair(f_u, g), n)};
}

std::pair<Poly, Poly> type2_tu_closed(const Rational& phi, const Rational& beta, int n) {
    const auto [tt, ut] = type2_row_polys(phi, beta, n);
    const Poly t = reverse_J(stretch2(tt), n);
    const Poly u = n == 0 ? Poly() : reverse_J(stretch2(ut), n - 1);
    return {t, u};
}

bool type2_quadratic_check(const TypeTwoContext& ctx, int n) {
    if (2 * n > ctx.order) throw InsufficientOrder("type2_quadratic_check: 2n exceeds order");
    const auto [t, u] = type2_tu(ctx, n);
    const Series lhs = pow(ctx.b, 2 * n) -
        Rational(2) * (Series::from_poly(t, ctx.order) * pow(ctx.b, n)) +
        Series::from_poly(pow(Poly({Rational(-1), Rational(0), ctx.beta}), n), ctx.order);
    return lhs.is_zero();
}

namespace {

bool product_matches(const Poly& exact, double lead, const std::vector<double>& offsets,
                     double tol) {
    std::vector<double> prod{lead};
    for (double q : offsets) {
        // multiply by (x + q)
        std::vector<double> next(prod.size() + 1, 0.0);
        for (std::size_t i = 0; i < prod.size(); ++i) {
            next[i + 1] += prod[i];
            next[i] += q * prod[i];
        }
        prod = std::move(next);
    }
    const int top = std::max(exact.degree(), static_cast<int>(prod.size()) - 1);
    for (int k = 0; k <= top; ++k) {
        const double approx = k < static_cast<int>(prod.size()) ? prod[static_cast<std::size_t>(k)] : 0.0;
        const double want = exact.coeff(k).to_double();
        // Coefficients grow like products of sec^2 terms; compare relative
        // once they leave the unit scale.
        if (std::abs(approx - want) >= tol * std::max(1.0, std::abs(want))) return false;
    }
    return true;
}

}  // namespace

bool type2_root_check(const Rational& phi, const Rational& beta, int n, double tol) {
    if (n < 1) throw UnsupportedIndex("type2_root_check: n must be >= 1");
    const auto [tt, ut] = type2_row_polys(phi, beta, n);
    const double pi = std::numbers::pi;
    const double phi_d = phi.to_double(), beta_d = beta.to_double();
    const bool even = n % 2 == 0;

    std::vector<double> t_offsets;
    for (int m = 1; m <= n / 2; ++m) {
        const double c2 = std::pow(std::cos((2.0 * m - 1.0) / (2.0 * n) * pi), 2);
        t_offsets.push_back((phi_d * phi_d - beta_d * c2) / c2);
    }
    std::vector<double> u_offsets;
    for (int m = 1; m <= (n - 1) / 2; ++m) {
        const double c2 = std::pow(std::cos(static_cast<double>(m) / n * pi), 2);
        u_offsets.push_back((phi_d * phi_d - beta_d * c2) / c2);
    }

    const double p_n = even ? 1.0 : n * phi_d;
    const double r_n = even ? n * phi_d : 1.0;
    return product_matches(tt, p_n, t_offsets, tol) && product_matches(ut, r_n, u_offsets, tol);
}

}  // namespace riordan
