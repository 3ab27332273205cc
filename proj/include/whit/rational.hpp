#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace whit {

// Arbitrary-precision rational. mpq_class keeps values reduced with a
// positive denominator once canonicalized; every construction path below
// canonicalizes, so operator== is exact value equality.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace detail {

inline mpz_class parse_integer(const std::string& text) {
    try {
        return mpz_class(text);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed integer: '" + text + "'");
    }
}

}  // namespace detail

// Accepts "a" or "a/b" in base 10; the result is reduced with positive
// denominator regardless of the sign placement in the input.
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(detail::parse_integer(text));
    const mpz_class num = detail::parse_integer(text.substr(0, slash));
    const mpz_class den = detail::parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("malformed rational: zero denominator in '" + text + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// base^e for e >= 0. Numerator and denominator are powered separately; a
// reduced fraction stays reduced under powers.
inline Rational rat_pow(Rational base, unsigned long e) {
    Rational out(1);
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return out;
}

}  // namespace whit
