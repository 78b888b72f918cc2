#include "qsmoments/moments.hpp"

#include <array>
#include <stdexcept>

namespace qsmoments {

namespace {

long long factorial_ll(int x) {
    long long r = 1;
    for (int i = 2; i <= x; ++i) r *= i;
    return r;
}

// s!/(a!b!c!); small s only, fits comfortably in 64 bits.
long long multinomial3(int s, int a, int b, int c) {
    return factorial_ll(s) / (factorial_ll(a) * factorial_ll(b) * factorial_ll(c));
}

template <typename Scalar>
Scalar scalar_from_int(const Int& v);
template <>
Rational scalar_from_int<Rational>(const Int& v) {
    return Rational(v);
}
template <>
Real scalar_from_int<Real>(const Int& v) {
    return to_real(v);
}

template <typename Scalar>
std::vector<std::vector<Scalar>> fill_moment_table(long n_max, int s_max) {
    std::vector<std::vector<Scalar>> beta(static_cast<size_t>(s_max) + 1,
                                          std::vector<Scalar>(static_cast<size_t>(n_max) + 1));
    for (long n = 0; n <= n_max; ++n) beta[0][static_cast<size_t>(n)] = Scalar(1);
    if (n_max < 1 || s_max < 1) return beta;

    // conv[b][c] = sum_{j=1..n} beta_b(n-j) beta_c(j-1), rebuilt per n for
    // b <= c (it is symmetric); this is the O(n) inner work per size.
    std::vector<std::vector<Scalar>> conv(static_cast<size_t>(s_max) + 1,
                                          std::vector<Scalar>(static_cast<size_t>(s_max) + 1));
    for (long n = 1; n <= n_max; ++n) {
        for (int b = 0; b <= s_max; ++b) {
            for (int c = b; b + c <= s_max; ++c) {
                Scalar t(0);
                const auto& bb = beta[static_cast<size_t>(b)];
                const auto& bc = beta[static_cast<size_t>(c)];
                for (long i = 0; i < n; ++i) t += bb[static_cast<size_t>(i)] * bc[static_cast<size_t>(n - 1 - i)];
                conv[static_cast<size_t>(b)][static_cast<size_t>(c)] = t;
            }
        }
        for (int s = 1; s <= s_max; ++s) {
            Scalar acc(0);
            for (int a = 0; a <= s && a <= n - 1; ++a) {
                const Scalar ff(Scalar(to_scalar<Scalar>(falling_factorial(n - 1, a))));
                for (int b = 0; a + b <= s; ++b) {
                    const int c = s - a - b;
                    const auto& t = conv[static_cast<size_t>(std::min(b, c))][static_cast<size_t>(std::max(b, c))];
                    acc += Scalar(multinomial3(s, a, b, c)) * ff * t;
                }
            }
            beta[static_cast<size_t>(s)][static_cast<size_t>(n)] = acc / Scalar(n);
        }
    }
    return beta;
}

} // namespace

const Rational& MomentTable::exact_at(long n, int s) const {
    if (mode_ != ArithmeticMode::Exact)
        throw std::invalid_argument("MomentTable::exact_at: table is in float mode");
    if (n < 0 || n > n_max_ || s < 0 || s > s_max_)
        throw std::invalid_argument("MomentTable::exact_at: entry outside the table");
    return exact_[static_cast<size_t>(s)][static_cast<size_t>(n)];
}

Real MomentTable::real_at(long n, int s) const {
    if (n < 0 || n > n_max_ || s < 0 || s > s_max_)
        throw std::invalid_argument("MomentTable::real_at: entry outside the table");
    if (mode_ == ArithmeticMode::Exact)
        return to_real(exact_[static_cast<size_t>(s)][static_cast<size_t>(n)]);
    return real_[static_cast<size_t>(s)][static_cast<size_t>(n)];
}

MomentTable factorial_moments_recurrence(long n_max, int s_max, ArithmeticMode mode) {
    if (n_max < 0) throw std::invalid_argument("factorial_moments_recurrence: n_max must be >= 0");
    if (s_max < 1) throw std::invalid_argument("factorial_moments_recurrence: s_max must be >= 1");
    MomentTable table;
    table.mode_ = mode;
    table.n_max_ = n_max;
    table.s_max_ = s_max;
    if (mode == ArithmeticMode::Exact)
        table.exact_ = fill_moment_table<Rational>(n_max, s_max);
    else
        table.real_ = fill_moment_table<Real>(n_max, s_max);
    return table;
}

TruncatedSeries moment_series(int s, int N) {
    if (s < 1) throw std::invalid_argument("moment_series: s must be >= 1");
    if (N < 0) throw std::invalid_argument("moment_series: order must be >= 0");

    std::vector<TruncatedSeries> f;
    f.reserve(static_cast<size_t>(s) + 1);
    f.push_back(binomial_pow_series(1, N)); // f_0 = (1-u)^{-1}

    for (int t = 1; t <= s; ++t) {
        // Source p_t = t! sum_{j+k+l+m=t; j,l != t} f_j^{(k)} f_l^{(m)} u^{k+m} / (j!k!l!m!).
        TruncatedSeries p(N);
        for (int j = 0; j <= t; ++j) {
            if (j == t) continue;
            for (int k = 0; j + k <= t; ++k) {
                for (int l = 0; j + k + l <= t; ++l) {
                    if (l == t) continue;
                    const int m = t - j - k - l;
                    TruncatedSeries term =
                        series_mul(series_derivative(f[static_cast<size_t>(j)], k),
                                   series_derivative(f[static_cast<size_t>(l)], m));
                    term = series_truncate(series_shift(term, k + m), N);
                    long long w = multinomial3(t, j, k, l + m) * multinomial3(l + m, l, m, 0);
                    p = series_add(p, series_scale(term, Rational(w)));
                }
            }
        }

        // Advance (1-u) f' - 2 f = (1-u) p coefficient-wise.
        std::vector<Rational> c(static_cast<size_t>(N) + 1);
        for (int i = 0; i < N; ++i) {
            Rational rhs = p[i];
            if (i >= 1) rhs -= p[i - 1];
            c[static_cast<size_t>(i) + 1] = (Rational(i + 2) * c[static_cast<size_t>(i)] + rhs) / Rational(i + 1);
        }
        f.emplace_back(std::move(c));
    }
    return f.back();
}

Rational raw_moment(const MomentTable& table, long n, int s) {
    if (s < 0) throw std::invalid_argument("raw_moment: s must be >= 0");
    Rational acc = 0;
    for (int j = 0; j <= s; ++j) acc += Rational(stirling_second(s, j)) * table.exact_at(n, j);
    return acc;
}

Real raw_moment_real(const MomentTable& table, long n, int s) {
    if (s < 0) throw std::invalid_argument("raw_moment_real: s must be >= 0");
    Real acc = 0;
    for (int j = 0; j <= s; ++j) acc += to_real(stirling_second(s, j)) * table.real_at(n, j);
    return acc;
}

Rational variance(const MomentTable& table, long n) {
    const Rational& b1 = table.exact_at(n, 1);
    return table.exact_at(n, 2) + b1 - b1 * b1;
}

Real variance_real(const MomentTable& table, long n) {
    const Real b1 = table.real_at(n, 1);
    return table.real_at(n, 2) + b1 - b1 * b1;
}

Int stirling_second(int s, int j) {
    if (s < 0 || j < 0 || j > s) return 0;
    std::vector<std::vector<Int>> table(static_cast<size_t>(s) + 1,
                                        std::vector<Int>(static_cast<size_t>(s) + 1));
    table[0][0] = 1;
    for (int i = 1; i <= s; ++i)
        for (int k = 1; k <= i; ++k)
            table[static_cast<size_t>(i)][static_cast<size_t>(k)] =
                Int(k) * table[static_cast<size_t>(i - 1)][static_cast<size_t>(k)] +
                table[static_cast<size_t>(i - 1)][static_cast<size_t>(k - 1)];
    return table[static_cast<size_t>(s)][static_cast<size_t>(j)];
}

} // namespace qsmoments
