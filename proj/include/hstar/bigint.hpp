// Exact integer and rational scalars used throughout the library.

#pragma once

#include "hstar/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hstar {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool fits_int64(const BigInt& v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

inline std::int64_t to_int64(const BigInt& v) {
    if (!fits_int64(v)) throw ResourceLimit("integer " + v.str() + " does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

inline std::string to_string(const BigInt& v) { return v.str(); }

/// "a/b" for non-integers, "a" otherwise.
inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline BigInt parse_bigint(std::string_view s) {
    if (s.empty()) fail("ParseError", "empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) fail("ParseError", "bad integer literal: " + std::string(s));
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9')
            fail("ParseError", "bad integer literal: " + std::string(s));
    BigInt v(std::string(s.substr(i)));
    return s[0] == '-' ? BigInt(-v) : v;
}

/// Accepts "a", "-a" or "a/b".
inline Rational parse_rational(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_bigint(s));
    BigInt den = parse_bigint(s.substr(slash + 1));
    if (den == 0) fail("ParseError", "zero denominator: " + std::string(s));
    return Rational(parse_bigint(s.substr(0, slash)), den);
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt floor(const Rational& q) { return floor_div(numerator(q), denominator(q)); }

/// Representative of x mod 1 in [0, 1).
inline Rational fractional_part(const Rational& x) { return x - Rational(floor(x)); }

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline BigInt ipow(const BigInt& base, unsigned e) {
    BigInt r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace hstar
