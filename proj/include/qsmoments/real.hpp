#pragma once

/**
 * @file real.hpp
 * @brief High-precision real scalar (IEEE binary128, ~33.6 significant digits).
 *
 * All floating-point work in the library uses this type. It comfortably
 * exceeds the documented precision targets (>= 30 significant digits of
 * working precision for float-mode moment tables, >= 12 digits for the
 * transfer coefficients).
 */

#include "qsmoments/rational.hpp"

#include <quadmath.h>

#include <string>

namespace qsmoments {

using Real = __float128;

/// Decimal string with the given number of significant digits (default 17,
/// the serialization width used by every output path).
inline std::string real_to_string(Real x, int digits = 17) {
    char buf[128];
    quadmath_snprintf(buf, sizeof buf, "%.*Qg", digits, x);
    return std::string(buf);
}

inline Real real_from_string(const std::string& s) {
    return strtoflt128(s.c_str(), nullptr);
}

namespace detail {

// Mantissa/exponent split: value = m * 2^e with m in [1/2, 1). Keeps the top
// 128 bits, which is below one ulp of binary128 for any operand size.
inline Real mpz_frexp(const Int& v, long& exp2) {
    if (v == 0) {
        exp2 = 0;
        return Real(0);
    }
    Int a = abs(v);
    long bits = static_cast<long>(mpz_sizeinbase(a.backend().data(), 2));
    if (bits > 128) a >>= (bits - 128);
    Real m = 0;
    mpz_srcptr z = a.backend().data();
    for (long i = static_cast<long>(mpz_size(z)) - 1; i >= 0; --i)
        m = m * Real(18446744073709551616.0) + Real(mpz_getlimbn(z, static_cast<mp_size_t>(i)));
    long kept = std::min(bits, 128L);
    m = ldexpq(m, static_cast<int>(-kept));
    exp2 = bits;
    return v < 0 ? -m : m;
}

} // namespace detail

/// Exact-to-working-precision conversion; handles operands far beyond the
/// binary128 exponent range as long as the value itself is representable.
inline Real to_real(const Int& v) {
    long e = 0;
    Real m = detail::mpz_frexp(v, e);
    return ldexpq(m, static_cast<int>(e));
}

inline Real to_real(const Rational& q) {
    long en = 0, ed = 0;
    Real mn = detail::mpz_frexp(numerator(q), en);
    Real md = detail::mpz_frexp(denominator(q), ed);
    if (mn == 0) return Real(0);
    return ldexpq(mn / md, static_cast<int>(en - ed));
}

} // namespace qsmoments
