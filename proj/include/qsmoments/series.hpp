#pragma once

/**
 * @file series.hpp
 * @brief Truncated formal power series over exact rationals.
 *
 * A series of order N stores the exact coefficients of u^0 .. u^N; it
 * represents its value mod u^(N+1). Binary operations on series of orders
 * N1 and N2 return order min(N1, N2): the truncation order is carried by
 * the value, never widened silently. Convolution is plain O(N^2) exact
 * schoolbook multiplication.
 *
 * Values are immutable after construction and safe to share across threads.
 */

#include "qsmoments/rational.hpp"

#include <utility>
#include <vector>

namespace qsmoments {

class TruncatedSeries {
public:
    /// Zero series of the given order.
    explicit TruncatedSeries(int order) : coeff_(static_cast<size_t>(order) + 1) {}

    /// Takes coefficients c_0..c_N; order is N = coefficients.size() - 1.
    explicit TruncatedSeries(std::vector<Rational> coefficients) : coeff_(std::move(coefficients)) {}

    int order() const { return static_cast<int>(coeff_.size()) - 1; }

    /// Coefficient of u^n.
    const Rational& operator[](int n) const { return coeff_.at(static_cast<size_t>(n)); }

    const std::vector<Rational>& coefficients() const { return coeff_; }

    bool operator==(const TruncatedSeries& other) const = default;

private:
    std::vector<Rational> coeff_;
};

/// Coefficient-wise exact sum, truncated at min order.
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);

/// Cauchy convolution, exact, truncated at min order.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// k-th formal derivative; output order = input order - k.
/// Throws std::invalid_argument when k > order.
TruncatedSeries series_derivative(const TruncatedSeries& a, int k);

/// Coefficient-wise multiplication by an exact scalar.
TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& factor);

/// u^k * a: coefficients shift up by k and the order extends by k, so the
/// operation is exact (used for the u^(k+m) factors of the moment ODE source).
TruncatedSeries series_shift(const TruncatedSeries& a, int k);

/// Truncation to a lower order N <= order(a).
TruncatedSeries series_truncate(const TruncatedSeries& a, int N);

/// L(u) = log(1/(1-u)): c_0 = 0, c_m = 1/m.
TruncatedSeries log_inv_series(int N);

/// (1-u)^(-alpha) for integer alpha >= 1: coefficient of u^n is
/// binomial(n+alpha-1, alpha-1).
TruncatedSeries binomial_pow_series(int alpha, int N);

/// Exact [u^n] of L^beta(u) * (1-u)^(-alpha), by repeated series_mul at
/// order n. The exact counterpart of the transfer-theorem expansion.
Rational coeff_exact(int alpha, int beta, long n);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    return series_add(a, b);
}
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    return series_mul(a, b);
}

} // namespace qsmoments
