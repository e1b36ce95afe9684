#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace riordan {

// Exact rational number. Always canonical: gcd(|num|, den) = 1, den > 0,
// zero is 0/1. Immutable value type; safe to copy across threads.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<long int>(n)) {}  // NOLINT: implicit on purpose
    Rational(long num, long den);
    explicit Rational(mpq_class v);

    // Strict "p/q" or "p": optional sign, digits, optionally '/' and a
    // positive integer. Anything else throws ParseError.
    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Exact square root if this is a square of a rational, else nullopt.
    std::optional<Rational> sqrt() const;

    Rational pow(long e) const;  // e < 0 requires a nonzero value

    std::string str() const { return v_.get_str(); }  // "p" or "p/q"
    double to_double() const { return v_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace riordan
