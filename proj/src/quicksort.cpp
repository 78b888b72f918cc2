#include "qsmoments/quicksort.hpp"

#include "qsmoments/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace qsmoments {

namespace internal {

CountResult count_comparisons(std::vector<int>& values, std::vector<int>& scratch,
                              PivotCostModel model) {
    CountResult result;
    const long long stage_offset = (model == PivotCostModel::MinusOne) ? -1 : +1;

    // Explicit work stack of [lo, hi) ranges; partition is stable on both
    // sides, so each subarray stays a uniformly distributed relative order.
    std::vector<std::pair<size_t, size_t>> work;
    if (!values.empty()) work.emplace_back(0, values.size());
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        const size_t len = hi - lo;
        if (len == 0) continue;
        result.comparisons += static_cast<long long>(len) + stage_offset;
        result.stages += 1;
        if (len == 1) continue;

        const int pivot = values[lo];
        scratch.clear();
        size_t w = lo;
        for (size_t i = lo + 1; i < hi; ++i) {
            if (values[i] < pivot)
                values[w++] = values[i];
            else
                scratch.push_back(values[i]);
        }
        const size_t mid = w;
        values[mid] = pivot;
        std::copy(scratch.begin(), scratch.end(), values.begin() + static_cast<long>(mid) + 1);
        work.emplace_back(lo, mid);
        work.emplace_back(mid + 1, hi);
    }
    return result;
}

} // namespace internal

long long quicksort_count(std::span<const int> perm, PivotCostModel model) {
    std::vector<int> values(perm.begin(), perm.end());
    std::vector<int> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("quicksort_count: input values must be distinct");
    std::vector<int> scratch;
    scratch.reserve(values.size());
    return internal::count_comparisons(values, scratch, model).comparisons;
}

ComparisonDistribution brute_force_distribution(long n, PivotCostModel model) {
    if (n < 1 || n > 9)
        throw std::invalid_argument("brute_force_distribution: n must be in [1, 9]");
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> values, scratch;
    scratch.reserve(perm.size());
    ComparisonDistribution dist;
    dist.n = n;
    do {
        values = perm;
        const auto r = internal::count_comparisons(values, scratch, model);
        dist.counts[r.comparisons] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return dist;
}

QuicksortExactEngine::QuicksortExactEngine(PivotCostModel model) : model_(model) {
    cache_.push_back(PgfPolynomial{0, {Rational(1)}}); // G_0 = 1
}

const PgfPolynomial& QuicksortExactEngine::pgf(long n) {
    if (n < 0) throw std::invalid_argument("pgf: n must be >= 0");
    while (static_cast<long>(cache_.size()) <= n) {
        const long m = static_cast<long>(cache_.size());
        const int shift = static_cast<int>(m) + (model_ == PivotCostModel::MinusOne ? -1 : +1);

        // sum_{j=1..m} G_{m-j} G_{j-1}: ordered pairs (a, b) with a+b = m-1;
        // the unordered product is computed once and counted twice.
        int deg = 0;
        for (long a = 0; a <= (m - 1) / 2; ++a)
            deg = std::max(deg, cache_[static_cast<size_t>(a)].degree() +
                                    cache_[static_cast<size_t>(m - 1 - a)].degree());
        std::vector<Rational> acc(static_cast<size_t>(deg) + 1);
        for (long a = 0; a <= (m - 1) / 2; ++a) {
            const auto& ga = cache_[static_cast<size_t>(a)].coeff;
            const auto& gb = cache_[static_cast<size_t>(m - 1 - a)].coeff;
            const int weight = (2 * a == m - 1) ? 1 : 2;
            for (size_t i = 0; i < ga.size(); ++i) {
                if (ga[i] == 0) continue;
                const Rational lhs = (weight == 1) ? ga[i] : Rational(2) * ga[i];
                for (size_t j = 0; j < gb.size(); ++j) {
                    if (gb[j] == 0) continue;
                    acc[i + j] += lhs * gb[j];
                }
            }
        }

        PgfPolynomial g;
        g.n = m;
        g.coeff.assign(acc.size() + static_cast<size_t>(shift), Rational(0));
        const Rational inv_m = Rational(1, m);
        for (size_t k = 0; k < acc.size(); ++k)
            g.coeff[k + static_cast<size_t>(shift)] = acc[k] * inv_m;
        cache_.push_back(std::move(g));
    }
    return cache_[static_cast<size_t>(n)];
}

ComparisonDistribution QuicksortExactEngine::distribution(long n) {
    const PgfPolynomial& g = pgf(n);
    const Int nf = factorial(n);
    ComparisonDistribution dist;
    dist.n = n;
    for (size_t k = 0; k < g.coeff.size(); ++k) {
        if (g.coeff[k] == 0) continue;
        const Rational scaled = g.coeff[k] * Rational(nf);
        if (denominator(scaled) != 1)
            throw InvariantViolation("distribution: n! * PGF coefficient is not an integer");
        dist.counts[static_cast<long long>(k)] = numerator(scaled);
    }
    return dist;
}

PgfPolynomial pgf(long n, PivotCostModel model) {
    QuicksortExactEngine engine(model);
    return engine.pgf(n);
}

ComparisonDistribution distribution(long n, PivotCostModel model) {
    QuicksortExactEngine engine(model);
    return engine.distribution(n);
}

Rational factorial_moment_from_distribution(const ComparisonDistribution& dist, int s) {
    if (s < 0) throw std::invalid_argument("factorial_moment_from_distribution: s must be >= 0");
    Int weighted = 0;
    for (const auto& [k, count] : dist.counts) weighted += falling_factorial(k, s) * count;
    return Rational(weighted, factorial(dist.n));
}

} // namespace qsmoments
