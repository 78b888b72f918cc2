#pragma once

/**
 * @file moments.hpp
 * @brief Factorial and raw moments of the quicksort comparison count.
 *
 * Two independent computational routes are provided:
 *
 *  - factorial_moments_recurrence: differentiate the PGF recurrence s times
 *    at z = 1 (general Leibniz rule), giving
 *      beta_s(n) = (1/n) sum_{j=1..n} sum_{a+b+c=s} s!/(a!b!c!)
 *                  * (n-1)_a * beta_b(n-j) * beta_c(j-1)
 *    with beta_0 = 1. The inner sums over j are convolutions maintained per
 *    n, so the table costs O(n_max^2 * s_max^2) scalar operations.
 *
 *  - moment_series: the generating function f_s(u) = sum_n beta_s(n) u^n
 *    solved coefficient-wise from the linear ODE
 *      (1-u) f_s' - 2 f_s = (1-u) p_s,
 *    where the source p_s is assembled from products of lower-order f_j and
 *    their derivatives.
 *
 * Tables can be exact (rational) or high-precision float (binary128,
 * ~33.6 significant digits; cumulative relative error stays far below the
 * 1e-12 target at the sizes this library touches).
 */

#include "qsmoments/rational.hpp"
#include "qsmoments/real.hpp"
#include "qsmoments/series.hpp"

#include <vector>

namespace qsmoments {

enum class ArithmeticMode { Exact, Float };

/// (n, s) -> beta_s(n) for 0 <= n <= n_max, 0 <= s <= s_max.
class MomentTable {
public:
    ArithmeticMode mode() const { return mode_; }
    long n_max() const { return n_max_; }
    int s_max() const { return s_max_; }

    /// Exact entry; requires exact mode.
    const Rational& exact_at(long n, int s) const;

    /// Entry as a high-precision real; works in both modes.
    Real real_at(long n, int s) const;

private:
    friend MomentTable factorial_moments_recurrence(long, int, ArithmeticMode);

    ArithmeticMode mode_ = ArithmeticMode::Exact;
    long n_max_ = 0;
    int s_max_ = 0;
    std::vector<std::vector<Rational>> exact_;  // [s][n]
    std::vector<std::vector<Real>> real_;       // [s][n]
};

/// Fills the full table bottom-up. s_max >= 1, n_max >= 0.
MomentTable factorial_moments_recurrence(long n_max, int s_max,
                                         ArithmeticMode mode = ArithmeticMode::Exact);

/// f_s(u) mod u^(N+1); coefficient n is beta_s(n), exact. Lower-order
/// generating functions are built recursively (f_0 is the geometric series).
TruncatedSeries moment_series(int s, int N);

/// E[C_n^s] = sum_j S(s,j) beta_j(n), via Stirling numbers of the second
/// kind. Requires exact mode and table coverage of (n, s).
Rational raw_moment(const MomentTable& table, long n, int s);

/// Same conversion in real arithmetic; works in both modes.
Real raw_moment_real(const MomentTable& table, long n, int s);

/// Var[C_n] = beta_2 + beta_1 - beta_1^2.
Rational variance(const MomentTable& table, long n);
Real variance_real(const MomentTable& table, long n);

/// Stirling number of the second kind S(s, j).
Int stirling_second(int s, int j);

} // namespace qsmoments
