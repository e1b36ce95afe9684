#include "riordan/rational.hpp"

#include <cctype>
#include <ostream>

#include "riordan/errors.hpp"

namespace riordan {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw ZeroConstantTerm("Rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    const std::string s(text);
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t num_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_begin) throw ParseError("malformed rational: '" + s + "'");
    std::size_t den_begin = std::string::npos;
    if (i < s.size() && s[i] == '/') {
        den_begin = ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_begin) throw ParseError("malformed rational: '" + s + "'");
    }
    if (i != s.size()) throw ParseError("malformed rational: '" + s + "'");

    mpq_class v;
    if (v.set_str(s, 10) != 0) throw ParseError("malformed rational: '" + s + "'");
    if (v.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ZeroConstantTerm("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::optional<Rational> Rational::sqrt() const {
    if (sign() < 0) return std::nullopt;
    const mpz_class n = num();
    const mpz_class d = den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(mpq_class(rn, rd));  // already canonical: gcd(n,d)=1
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero() && e < 0) throw ZeroConstantTerm("Rational: 0^negative");
    mpz_class n = num(), d = den();
    const auto k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), n.get_mpz_t(), k);
    mpz_pow_ui(pd.get_mpz_t(), d.get_mpz_t(), k);
    mpq_class r = e > 0 ? mpq_class(pn, pd) : mpq_class(pd, pn);
    r.canonicalize();  // fixes the sign of the denominator for e < 0
    return Rational(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace riordan
