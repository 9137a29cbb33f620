#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccsubmod/archive.hpp"
#include "ccsubmod/bitvector.hpp"
#include "ccsubmod/chance.hpp"
#include "ccsubmod/problem.hpp"
#include "ccsubmod/rng.hpp"

namespace ccsubmod {

enum class Algorithm { gsemo, sw_gsemo, nsga2 };

std::string to_string(Algorithm algorithm);
Algorithm parse_algorithm(const std::string& name);

struct Nsga2Params {
    std::size_t population = 20;
    std::size_t children = 10;
    double crossover_probability = 0.9;

    friend bool operator==(const Nsga2Params&, const Nsga2Params&) = default;
};

struct RunConfig {
    Algorithm algorithm = Algorithm::gsemo;
    std::uint64_t t_max = 0;
    std::uint64_t seed = 0;
    Regime regime = Regime::surrogate_g2;
    Nsga2Params nsga2;
    bool trace = false;

    /// Throws std::invalid_argument on inconsistent parameters.
    void validate() const;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// One offspring evaluation.
struct TraceRecord {
    std::uint64_t t = 0;
    double parent_g2 = 0.0;
    double g1 = 0.0;
    double g2 = 0.0;
    bool accepted = false;
    bool in_window = false;
    /// |P-hat| at selection time (window members), 0 outside the window phase.
    std::size_t window_size = 0;
};

struct RunResult {
    RunConfig config;
    double best_g1 = 0.0;
    double best_g2 = 0.0;
    BitVector best_bits;
    /// Final trade-off set: archive for GSEMO variants, first non-dominated
    /// front (distinct objectives) of the final population for NSGA-II.
    std::vector<Objectives> front;
    std::size_t archive_size = 0;
    std::size_t peak_archive_size = 0;
    std::uint64_t evaluations = 0;
    double wall_time_s = 0.0;
    std::vector<TraceRecord> trace;
};

/// Flips every bit independently with probability 1/n.
BitVector standard_bit_mutation(const BitVector& x, Rng& rng);
void mutate_in_place(BitVector& x, Rng& rng);

struct SlidingChoice {
    std::size_t index = 0;
    bool in_window = false;
    std::size_t window_size = 0;
};

/// Parent selection of the sliding-window GSEMO.
///
/// With c = (t / t_max) * B and t <= t_max, members whose g2 lies in
/// [floor(c), ceil(c)] form the window and one of them is drawn uniformly.
/// An empty window falls back to the member with the largest g1 among those
/// with g2 <= floor(c) (uniform over the archive if there is none). For
/// t > t_max the parent is uniform over the archive.
SlidingChoice sliding_selection(const ParetoArchive& archive, std::uint64_t t, std::uint64_t t_max, double budget,
                                Rng& rng);

RunResult run_gsemo(const Instance& instance, const RunConfig& cfg);
RunResult run_sw_gsemo(const Instance& instance, const RunConfig& cfg);
RunResult run_nsga2(const Instance& instance, const RunConfig& cfg);

/// Dispatches on cfg.algorithm.
RunResult run(const Instance& instance, const RunConfig& cfg);

/// Fronts of fast non-dominated sorting (maximize g1, minimize g2). Within a
/// front indices are ascending.
std::vector<std::vector<std::size_t>> fast_non_dominated_sort(std::span<const Objectives> points);

/// Crowding distance of each member of `front` (same order as `front`).
std::vector<double> crowding_distance(std::span<const Objectives> points, std::span<const std::size_t> front);

/// e * k * n * ln(n k) with k = min(n + 1, floor(B / a) + 1).
double iid_time_budget(std::size_t n, double budget, std::uint64_t a);
/// 2 e n (B / a_min) ln(n B / a_min).
double same_dispersion_time_budget(std::size_t n, double budget, std::uint64_t a_min);

/// min(n + 1, floor(B / a) + 1): maximal archive size under IID weights.
std::size_t iid_population_bound(std::size_t n, double budget, std::uint64_t a);

}  // namespace ccsubmod
