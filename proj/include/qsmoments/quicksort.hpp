#pragma once

/**
 * @file quicksort.hpp
 * @brief Exact comparison-count distribution of quicksort on random permutations.
 *
 * Model: the input is a uniformly random permutation of {1..n}; the pivot is
 * the first element; the remaining elements are split stably into the
 * less-than block followed by the greater-than block, which preserves the
 * uniform distribution on both produced subarrays. One partitioning stage of
 * a subarray of length m costs m-1 comparisons (m+1 under the alternate cost
 * model).
 *
 * An engine instance memoizes the probability generating functions G_0..G_n
 * bottom-up; completed values are immutable and shareable across threads.
 */

#include "qsmoments/rational.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace qsmoments {

/// Comparisons charged per partitioning stage of a length-m subarray.
enum class PivotCostModel {
    MinusOne, ///< m - 1 (default)
    PlusOne,  ///< m + 1
};

/// Probability generating function of the comparison count for size n:
/// coefficient k is P(exactly k comparisons) = a_{n,k}/n!.
struct PgfPolynomial {
    long n = 0;
    std::vector<Rational> coeff;

    int degree() const { return static_cast<int>(coeff.size()) - 1; }

    Rational evaluate(const Rational& z) const {
        Rational r = 0;
        for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) r = r * z + *it;
        return r;
    }
};

/// k -> a_{n,k}: number of permutations of size n that take exactly k
/// comparisons. Counts sum to n!.
struct ComparisonDistribution {
    long n = 0;
    std::map<long long, Int> counts;

    Int total() const {
        Int t = 0;
        for (const auto& [k, c] : counts) t += c;
        return t;
    }
};

/// Deterministic comparison count of quicksort on one input.
/// Throws std::invalid_argument when the values are not distinct.
long long quicksort_count(std::span<const int> perm,
                          PivotCostModel model = PivotCostModel::MinusOne);

/// Exhaustive oracle: enumerates all n! permutations (guarded to 1 <= n <= 9).
ComparisonDistribution brute_force_distribution(long n,
                                                PivotCostModel model = PivotCostModel::MinusOne);

/// Memoizing engine for G_0..G_n and the exact distributions derived from
/// them. Single-writer while tables grow; computed polynomials never change.
class QuicksortExactEngine {
public:
    explicit QuicksortExactEngine(PivotCostModel model = PivotCostModel::MinusOne);

    PivotCostModel model() const { return model_; }

    /// G_n, built bottom-up via G_n = z^d/n * sum_j G_{n-j} G_{j-1}.
    const PgfPolynomial& pgf(long n);

    /// n! times the PGF coefficients. Integrality of every count is asserted;
    /// a violation throws InvariantViolation (an implementation bug).
    ComparisonDistribution distribution(long n);

private:
    PivotCostModel model_;
    std::vector<PgfPolynomial> cache_;
};

/// Convenience wrappers over a throwaway engine.
PgfPolynomial pgf(long n, PivotCostModel model = PivotCostModel::MinusOne);
ComparisonDistribution distribution(long n, PivotCostModel model = PivotCostModel::MinusOne);

/// s-th factorial moment sum_k (k)_s a_{n,k} / n!, exact.
Rational factorial_moment_from_distribution(const ComparisonDistribution& dist, int s);

namespace internal {

/// Validation-free counting core used by the simulator; `scratch` is reused
/// across calls. Also reports the number of partitioning stages run.
struct CountResult {
    long long comparisons = 0;
    long long stages = 0;
};
CountResult count_comparisons(std::vector<int>& values, std::vector<int>& scratch,
                              PivotCostModel model);

} // namespace internal

} // namespace qsmoments
