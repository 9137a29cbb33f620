#pragma once

#include <cstddef>
#include <string>

#include "ccsubmod/bitvector.hpp"
#include "ccsubmod/problem.hpp"

namespace ccsubmod {

/// Which quantity serves as the second (minimized) objective.
///  - surrogate_g2: the surrogate weight of the selection.
///  - expected_g2: the expected weight E[W(x)], intended for same-dispersion weights.
/// Feasibility is always decided by the surrogate weight.
enum class Regime { surrogate_g2, expected_g2 };

std::string to_string(Regime regime);
Regime parse_regime(const std::string& name);

/// Bi-objective fitness: g1 maximized, g2 minimized. g1 == -1 marks an
/// infeasible selection.
struct Objectives {
    double g1 = 0.0;
    double g2 = 0.0;

    [[nodiscard]] bool feasible() const noexcept { return g1 >= 0.0; }
    friend bool operator==(const Objectives&, const Objectives&) = default;
};

inline constexpr double infeasible_g1 = -1.0;

double expected_weight(const BitVector& x, const WeightModel& w);
double weight_variance(const BitVector& x, const WeightModel& w);

/// Surrogate weight from the sufficient statistics of a selection.
double surrogate_weight(double expected, std::size_t count, double dispersion, double alpha, SurrogateKind kind);
double surrogate_weight(const BitVector& x, const WeightModel& w, double alpha, SurrogateKind kind);

/// Surrogate and expected weight of one selection, as produced by evaluate().
struct Evaluation {
    Objectives objectives;
    double expected = 0.0;
    double surrogate = 0.0;
    std::size_t count = 0;
};

Evaluation evaluate_full(const BitVector& x, const Instance& instance, Regime regime);

inline Objectives evaluate(const BitVector& x, const Instance& instance, Regime regime) {
    return evaluate_full(x, instance, regime).objectives;
}

/// Weak: a.g1 >= b.g1 and a.g2 <= b.g2. Strict additionally requires one
/// of the two to be a strict inequality.
constexpr bool dominates(const Objectives& a, const Objectives& b, bool strict) noexcept {
    const bool weak = a.g1 >= b.g1 && a.g2 <= b.g2;
    if (!strict) return weak;
    return weak && (a.g1 > b.g1 || a.g2 < b.g2);
}

constexpr bool weakly_dominates(const Objectives& a, const Objectives& b) noexcept { return dominates(a, b, false); }
constexpr bool strictly_dominates(const Objectives& a, const Objectives& b) noexcept { return dominates(a, b, true); }

}  // namespace ccsubmod
