#include "riordan/poly.hpp"

#include <algorithm>

namespace riordan {

Poly Poly::monomial(int n, Rational coeff) {
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    c.back() = std::move(coeff);
    return Poly(std::move(c));
}

int Poly::degree() const {
    for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k)
        if (!c_[static_cast<std::size_t>(k)].is_zero()) return k;
    return -1;
}

Rational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(k)];
}

Poly Poly::trimmed() const {
    std::vector<Rational> c(c_.begin(), c_.begin() + (degree() + 1));
    return Poly(std::move(c));
}

Poly Poly::operator-() const {
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    const int da = a.degree(), db = b.degree();
    if (da < 0 || db < 0) return Poly();
    std::vector<Rational> c(static_cast<std::size_t>(da + db) + 1);
    for (int i = 0; i <= da; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; j <= db; ++j)
            c[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
    return Poly(std::move(c));
}

Poly operator*(const Rational& s, const Poly& p) {
    std::vector<Rational> c(p.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * p.c_[i];
    return Poly(std::move(c));
}

bool operator==(const Poly& a, const Poly& b) {
    const int d = std::max(a.degree(), b.degree());
    for (int k = 0; k <= d; ++k)
        if (a.coeff(k) != b.coeff(k)) return false;
    return true;
}

Rational Poly::eval(const Rational& x) const {
    Rational r(0);
    for (int k = degree(); k >= 0; --k) r = r * x + coeff(k);
    return r;
}

double Poly::eval_double(double x) const {
    double r = 0.0;
    for (int k = degree(); k >= 0; --k) r = r * x + coeff(k).to_double();
    return r;
}

Poly Poly::compose(const Poly& inner) const {
    Poly r;
    for (int k = degree(); k >= 0; --k) r = r * inner + Poly::constant(coeff(k));
    return r;
}

Poly pow(const Poly& p, int e) {
    if (e < 0) throw std::invalid_argument("pow(Poly): negative exponent");
    Poly r = Poly::constant(Rational(1));
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

Poly stretch2(const Poly& p) {
    const int d = p.degree();
    if (d < 0) return Poly();
    std::vector<Rational> c(static_cast<std::size_t>(2 * d) + 1);
    for (int k = 0; k <= d; ++k) c[static_cast<std::size_t>(2 * k)] = p.coeff(k);
    return Poly(std::move(c));
}

}  // namespace riordan
