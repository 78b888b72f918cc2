#include "qsmoments/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsmoments {

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[static_cast<size_t>(i)] = a[i] + b[i];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b[j] == 0) continue;
            c[static_cast<size_t>(i + j)] += a[i] * b[j];
        }
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_derivative(const TruncatedSeries& a, int k) {
    if (k < 0 || k > a.order())
        throw std::invalid_argument("series_derivative: k must satisfy 0 <= k <= order");
    const int n = a.order() - k;
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        // d^k/du^k u^(i+k) = (i+k)!/i! u^i
        Rational v = a[i + k];
        for (int t = 1; t <= k; ++t) v *= Rational(i + t);
        c[static_cast<size_t>(i)] = std::move(v);
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& factor) {
    std::vector<Rational> c(a.coefficients());
    for (auto& v : c) v *= factor;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_shift(const TruncatedSeries& a, int k) {
    if (k < 0) throw std::invalid_argument("series_shift: k must be non-negative");
    std::vector<Rational> c(a.coefficients().size() + static_cast<size_t>(k));
    for (size_t i = 0; i < a.coefficients().size(); ++i) c[i + static_cast<size_t>(k)] = a.coefficients()[i];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_truncate(const TruncatedSeries& a, int N) {
    if (N < 0 || N > a.order())
        throw std::invalid_argument("series_truncate: N must satisfy 0 <= N <= order");
    std::vector<Rational> c(a.coefficients().begin(), a.coefficients().begin() + N + 1);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries log_inv_series(int N) {
    if (N < 0) throw std::invalid_argument("log_inv_series: order must be non-negative");
    std::vector<Rational> c(static_cast<size_t>(N) + 1);
    for (int m = 1; m <= N; ++m) c[static_cast<size_t>(m)] = Rational(1, m);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries binomial_pow_series(int alpha, int N) {
    if (alpha < 1) throw std::invalid_argument("binomial_pow_series: alpha must be >= 1");
    if (N < 0) throw std::invalid_argument("binomial_pow_series: order must be non-negative");
    std::vector<Rational> c(static_cast<size_t>(N) + 1);
    // binomial(n+alpha-1, alpha-1), built incrementally.
    Int b = 1;
    for (int n = 0; n <= N; ++n) {
        c[static_cast<size_t>(n)] = Rational(b);
        b = b * Int(n + alpha) / Int(n + 1);
    }
    return TruncatedSeries(std::move(c));
}

Rational coeff_exact(int alpha, int beta, long n) {
    if (alpha < 1) throw std::invalid_argument("coeff_exact: alpha must be >= 1");
    if (beta < 0) throw std::invalid_argument("coeff_exact: beta must be >= 0");
    if (n < 0) throw std::invalid_argument("coeff_exact: n must be >= 0");
    const int N = static_cast<int>(n);
    TruncatedSeries acc = binomial_pow_series(alpha, N);
    if (beta > 0) {
        const TruncatedSeries L = log_inv_series(N);
        for (int i = 0; i < beta; ++i) acc = series_mul(acc, L);
    }
    return acc[N];
}

} // namespace qsmoments
