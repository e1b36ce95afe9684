#pragma once

#include <initializer_list>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan {

// Exact polynomial with rational coefficients. Trailing zeros may be
// present; degree() and equality ignore them. degree() of the zero
// polynomial is -1.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) {}
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}
    static Poly constant(Rational v) { return Poly({std::move(v)}); }
    static Poly x() { return Poly({Rational(0), Rational(1)}); }
    // x^n, n >= 0
    static Poly monomial(int n, Rational coeff = Rational(1));

    int degree() const;
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return degree() < 0; }

    // Copy without trailing zeros (zero polynomial -> empty coefficient list).
    Poly trimmed() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& p);

    // Mathematical equality: trailing zeros do not matter.
    friend bool operator==(const Poly& a, const Poly& b);

    Rational eval(const Rational& x) const;
    double eval_double(double x) const;  // Horner in float64

    Poly compose(const Poly& inner) const;

private:
    std::vector<Rational> c_;
};

Poly pow(const Poly& p, int e);  // e >= 0

// Substitute x -> x^2.
Poly stretch2(const Poly& p);

}  // namespace riordan
