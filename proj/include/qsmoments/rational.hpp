#pragma once

/**
 * @file rational.hpp
 * @brief Exact integer and rational scalars.
 *
 * Everything exact in this library runs on GMP through the
 * boost::multiprecision wrappers. Rationals are kept canonical by GMP
 * itself: denominator > 0 and gcd(|num|, den) = 1 after every operation,
 * so no rounding or drift is possible anywhere downstream.
 *
 * Rendering convention used by every output path: "p/q" in lowest terms,
 * "p" alone when the denominator is 1.
 */

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace qsmoments {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

/// (k)_s = k(k-1)...(k-s+1); equals 0 for integer k with 0 <= k < s.
inline Int falling_factorial(long long k, int s) {
    Int r = 1;
    for (int i = 0; i < s; ++i) r *= Int(k - i);
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= Int(n - i);
        r /= Int(i + 1);
    }
    return r;
}

/// "p/q" in lowest terms, "p" when q = 1.
inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const Int& z) { return z.str(); }

inline Rational rational_from_string(const std::string& s) { return Rational(s); }

} // namespace qsmoments
