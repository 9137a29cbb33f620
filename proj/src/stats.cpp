#include "ccsubmod/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ccsubmod::stats {

double mean(std::span<const double> xs) {
    if (xs.empty()) return 0.0;
    return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double stddev(std::span<const double> xs) {
    if (xs.empty()) return 0.0;
    const double m = mean(xs);
    double ss = 0.0;
    for (const auto x : xs) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(xs.size()));
}

namespace {

constexpr double kEps = 1e-16;
constexpr int kMaxIter = 100000;

// Lower series P(a, x), valid for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < kMaxIter; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * kEps) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper continued fraction Q(a, x) (modified Lentz), valid for x >= a + 1.
double gamma_q_fraction(double a, double x) {
    constexpr double tiny = std::numeric_limits<double>::min() / kEps;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxIter; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double regularized_gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw std::invalid_argument("regularized_gamma_q needs a > 0, x >= 0");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_fraction(a, x);
}

double chi_square_sf(double x, double dof) {
    if (x <= 0.0) return 1.0;
    return regularized_gamma_q(dof / 2.0, x / 2.0);
}

std::vector<double> average_ranks(std::span<const double> pooled) {
    const std::size_t n = pooled.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pooled[a] < pooled[b]; });
    std::vector<double> ranks(n);
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j + 1 < n && pooled[order[j + 1]] == pooled[order[i]]) ++j;
        const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

KruskalWallis kruskal_wallis(const std::vector<std::vector<double>>& groups) {
    if (groups.size() < 2) throw std::invalid_argument("Kruskal-Wallis needs at least two groups");
    std::vector<double> pooled;
    for (const auto& g : groups) {
        if (g.empty()) throw std::invalid_argument("Kruskal-Wallis groups must be non-empty");
        pooled.insert(pooled.end(), g.begin(), g.end());
    }
    const auto ranks = average_ranks(pooled);
    const auto total = static_cast<double>(pooled.size());

    KruskalWallis result;
    result.total = pooled.size();
    std::vector<double> sorted = pooled;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        const auto t = static_cast<double>(j - i);
        result.tie_sum += t * t * t - t;
        i = j;
    }

    double weighted = 0.0;
    std::size_t offset = 0;
    for (const auto& g : groups) {
        double sum = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i) sum += ranks[offset + i];
        offset += g.size();
        const auto ni = static_cast<double>(g.size());
        result.mean_ranks.push_back(sum / ni);
        weighted += sum * sum / ni;
    }

    const double correction = 1.0 - result.tie_sum / (total * total * total - total);
    if (!(correction > 0.0)) {
        result.h = 0.0;
        result.p = 1.0;
        return result;
    }
    result.h = (12.0 / (total * (total + 1.0)) * weighted - 3.0 * (total + 1.0)) / correction;
    result.p = chi_square_sf(result.h, static_cast<double>(groups.size() - 1));
    return result;
}

char to_char(Mark m) {
    switch (m) {
        case Mark::better: return '+';
        case Mark::worse: return '-';
        case Mark::equal: return '=';
    }
    return '?';
}

std::vector<std::vector<Mark>> posthoc_marks(const std::vector<std::vector<double>>& groups, double family_alpha,
                                             bool higher_is_better) {
    const std::size_t k = groups.size();
    std::vector<std::vector<Mark>> marks(k, std::vector<Mark>(k, Mark::equal));
    const auto kw = kruskal_wallis(groups);
    if (!(kw.p < family_alpha)) return marks;

    const auto total = static_cast<double>(kw.total);
    const double variance = total * (total + 1.0) / 12.0 - kw.tie_sum / (12.0 * (total - 1.0));
    const double pairs = static_cast<double>(k * (k - 1) / 2);
    const double threshold = family_alpha / pairs;

    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            const double se = std::sqrt(variance * (1.0 / static_cast<double>(groups[i].size()) +
                                                    1.0 / static_cast<double>(groups[j].size())));
            const double diff = kw.mean_ranks[i] - kw.mean_ranks[j];
            if (!(se > 0.0)) continue;
            const double p = std::erfc(std::fabs(diff / se) / std::sqrt(2.0));
            if (!(p < threshold)) continue;
            const bool i_higher = diff > 0.0;
            const bool i_better = i_higher == higher_is_better;
            marks[i][j] = i_better ? Mark::better : Mark::worse;
            marks[j][i] = i_better ? Mark::worse : Mark::better;
        }
    }
    return marks;
}

}  // namespace ccsubmod::stats
