#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ccsubmod::stats {

double mean(std::span<const double> xs);
/// Population standard deviation (divides by n).
double stddev(std::span<const double> xs);

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
double regularized_gamma_q(double a, double x);
/// Pr[X > x] for X ~ chi-square(dof).
double chi_square_sf(double x, double dof);

/// 1-based ranks of the pooled samples; ties receive their average rank.
std::vector<double> average_ranks(std::span<const double> pooled);

struct KruskalWallis {
    double h = 0.0;
    double p = 1.0;
    std::vector<double> mean_ranks;
    /// Sum over tie groups of (t^3 - t).
    double tie_sum = 0.0;
    std::size_t total = 0;
};

/// Tie-corrected Kruskal-Wallis H test. Requires >= 2 non-empty groups. If
/// every observation is equal H = 0 and p = 1.
KruskalWallis kruskal_wallis(const std::vector<std::vector<double>>& groups);

enum class Mark { better, worse, equal };

char to_char(Mark m);

/// Pairwise Dunn z-tests with Bonferroni correction, gated on the
/// Kruskal-Wallis test at `family_alpha`.
///
/// marks[i][j] is the verdict of group i against group j: `better` when i's
/// mean rank is significantly higher (or lower, if higher_is_better is
/// false). The diagonal is `equal`.
std::vector<std::vector<Mark>> posthoc_marks(const std::vector<std::vector<double>>& groups,
                                             double family_alpha = 0.05, bool higher_is_better = true);

}  // namespace ccsubmod::stats
