#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ccsubmod/algorithms.hpp"

namespace ccsubmod {

std::string to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::gsemo: return "gsemo";
        case Algorithm::sw_gsemo: return "sw-gsemo";
        case Algorithm::nsga2: return "nsga2";
    }
    return "unknown";
}

Algorithm parse_algorithm(const std::string& name) {
    if (name == "gsemo") return Algorithm::gsemo;
    if (name == "sw-gsemo" || name == "swgsemo" || name == "sw_gsemo") return Algorithm::sw_gsemo;
    if (name == "nsga2" || name == "nsga-ii") return Algorithm::nsga2;
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

void RunConfig::validate() const {
    if (algorithm == Algorithm::nsga2) {
        if (nsga2.population < 2) throw std::invalid_argument("NSGA-II population must be at least 2");
        if (nsga2.children < 1 || nsga2.children > nsga2.population)
            throw std::invalid_argument("NSGA-II children must satisfy 1 <= lambda <= mu");
        if (!(nsga2.crossover_probability >= 0.0 && nsga2.crossover_probability <= 1.0))
            throw std::invalid_argument("crossover probability must lie in [0, 1]");
    }
}

void mutate_in_place(BitVector& x, Rng& rng) {
    const std::size_t n = x.size();
    if (n == 0) return;
    // Gaps between flipped positions are geometric with success probability 1/n.
    const double log_q = std::log1p(-1.0 / static_cast<double>(n));
    std::size_t pos = 0;
    while (true) {
        const double gap = std::floor(std::log(rng.uniform01_open_low()) / log_q);
        if (!(gap < static_cast<double>(n - pos))) break;
        pos += static_cast<std::size_t>(gap);
        x.flip(pos);
        ++pos;
        if (pos >= n) break;
    }
}

BitVector standard_bit_mutation(const BitVector& x, Rng& rng) {
    BitVector y = x;
    mutate_in_place(y, rng);
    return y;
}

SlidingChoice sliding_selection(const ParetoArchive& archive, std::uint64_t t, std::uint64_t t_max, double budget,
                                Rng& rng) {
    if (archive.empty()) throw std::invalid_argument("sliding selection on an empty archive");
    if (t > t_max || t_max == 0) return {rng.uniform_index(archive.size()), false, 0};

    const double c = static_cast<double>(t) / static_cast<double>(t_max) * budget;
    const double lo = std::floor(c);
    const double hi = std::ceil(c);
    const auto [first, last] = archive.g2_range(lo, hi);
    if (first < last) return {first + rng.uniform_index(last - first), true, last - first};

    const std::size_t below = archive.count_g2_at_most(lo);
    if (below > 0) return {below - 1, false, 0};
    return {rng.uniform_index(archive.size()), false, 0};
}

namespace {

enum class ParentRule { uniform, sliding };

RunResult run_archive_ea(const Instance& instance, const RunConfig& cfg, ParentRule rule) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    Rng rng(cfg.seed);
    RunResult result;
    result.config = cfg;

    ParetoArchive archive;
    {
        Individual empty;
        empty.bits = BitVector(instance.size());
        empty.obj = evaluate(empty.bits, instance, cfg.regime);
        archive.insert(std::move(empty));
    }
    result.evaluations = 1;
    if (cfg.trace) result.trace.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(cfg.t_max, 1U << 24)));

    for (std::uint64_t t = 1; t <= cfg.t_max; ++t) {
        SlidingChoice choice;
        if (rule == ParentRule::sliding) choice = sliding_selection(archive, t, cfg.t_max, instance.budget(), rng);
        else choice.index = rng.uniform_index(archive.size());

        const Individual& parent = archive[choice.index];
        const double parent_g2 = parent.obj.g2;
        Individual child;
        child.bits = parent.bits;
        mutate_in_place(child.bits, rng);
        child.obj = evaluate(child.bits, instance, cfg.regime);
        child.born_at = t;
        child.parent_in_window = choice.in_window;
        ++result.evaluations;

        const Objectives child_obj = child.obj;
        const bool accepted = archive.insert(std::move(child)) == InsertOutcome::accepted;
        if (cfg.trace)
            result.trace.push_back({t, parent_g2, child_obj.g1, child_obj.g2, accepted, choice.in_window,
                                    choice.window_size});
    }

    if (const auto* best = archive.best_feasible()) {
        result.best_g1 = best->obj.g1;
        result.best_g2 = best->obj.g2;
        result.best_bits = best->bits;
    } else {
        result.best_bits = BitVector(instance.size());
    }
    for (const auto& m : archive.members()) result.front.push_back(m.obj);
    result.archive_size = archive.size();
    result.peak_archive_size = archive.peak_size();
    result.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace

RunResult run_gsemo(const Instance& instance, const RunConfig& cfg) {
    if (cfg.algorithm != Algorithm::gsemo) throw std::invalid_argument("run_gsemo requires algorithm = gsemo");
    return run_archive_ea(instance, cfg, ParentRule::uniform);
}

RunResult run_sw_gsemo(const Instance& instance, const RunConfig& cfg) {
    if (cfg.algorithm != Algorithm::sw_gsemo) throw std::invalid_argument("run_sw_gsemo requires algorithm = sw-gsemo");
    return run_archive_ea(instance, cfg, ParentRule::sliding);
}

RunResult run(const Instance& instance, const RunConfig& cfg) {
    switch (cfg.algorithm) {
        case Algorithm::gsemo: return run_gsemo(instance, cfg);
        case Algorithm::sw_gsemo: return run_sw_gsemo(instance, cfg);
        case Algorithm::nsga2: return run_nsga2(instance, cfg);
    }
    throw std::invalid_argument("unknown algorithm");
}

std::size_t iid_population_bound(std::size_t n, double budget, std::uint64_t a) {
    const auto by_budget = static_cast<std::size_t>(std::floor(budget / static_cast<double>(a))) + 1;
    return std::min(n + 1, by_budget);
}

double iid_time_budget(std::size_t n, double budget, std::uint64_t a) {
    const auto k = static_cast<double>(iid_population_bound(n, budget, a));
    const auto nn = static_cast<double>(n);
    return std::numbers::e * k * nn * std::log(nn * k);
}

double same_dispersion_time_budget(std::size_t n, double budget, std::uint64_t a_min) {
    const auto nn = static_cast<double>(n);
    const double ratio = budget / static_cast<double>(a_min);
    return 2.0 * std::numbers::e * nn * ratio * std::log(nn * ratio);
}

}  // namespace ccsubmod
