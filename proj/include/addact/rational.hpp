#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "errors.hpp"

namespace addact {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational numbers, always stored reduced with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt c = 1;
    for (unsigned i = 0; i < k; ++i) {
        c *= n - i;
        c /= i + 1;  // exact at every step
    }
    return c;
}

/// Builds num/den with sign normalization; den may be negative but not zero.
inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw ParseError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational(num, den);
}

/// Serializes as "p" for integers, "p/q" otherwise.
inline std::string rational_str(const Rational& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

/// Parses "p" or "p/q" with optional sign; q must be nonzero.
inline Rational parse_rational(const std::string& s) {
    auto bad = [&]() { throw ParseError("invalid rational literal: '" + s + "'"); };
    if (s.empty()) bad();
    std::string::size_type slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) bad();
        return make_rational(num, den);
    } catch (const std::exception&) {
        bad();
    }
    return Rational();  // unreachable
}

}  // namespace addact
