#pragma once

// Exact scalar type used everywhere: arbitrary-precision rationals (GMP via
// boost::multiprecision). Values are kept canonical by the backend: lowest
// terms, positive denominator. No floating point anywhere in the library.

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace ampli {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline int sign_of(const Rational& x) {
    if (x > 0) return 1;
    if (x < 0) return -1;
    return 0;
}

inline int sign_of(const Integer& x) {
    if (x > 0) return 1;
    if (x < 0) return -1;
    return 0;
}

/// Canonical "p/q" (or "p" when q == 1), both parts in lowest terms.
inline std::string rational_to_string(const Rational& x) {
    Integer num = boost::multiprecision::numerator(x);
    Integer den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Accepts "p", "p/q", optional leading '-' on either part. Throws on junk.
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

}  // namespace ampli
