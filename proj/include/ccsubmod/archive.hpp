#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ccsubmod/bitvector.hpp"
#include "ccsubmod/chance.hpp"

namespace ccsubmod {

struct Individual {
    BitVector bits;
    Objectives obj;
    std::uint64_t born_at = 0;
    bool parent_in_window = false;
};

enum class InsertOutcome { accepted, rejected };

/// Population of mutually non-dominated individuals with distinct objective
/// vectors.
///
/// Members are kept sorted by ascending g2. Non-domination together with
/// distinctness forces g1 to be strictly ascending in the same order, so the
/// member with the largest g1 among those with g2 <= c is always the last one
/// in that prefix.
class ParetoArchive {
public:
    ParetoArchive() = default;

    /// Rejects y if some member strictly dominates it; otherwise inserts y and
    /// removes every member that y weakly dominates (including an exact
    /// objective duplicate).
    InsertOutcome insert(Individual y);

    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
    [[nodiscard]] const Individual& operator[](std::size_t i) const noexcept { return members_[i]; }
    [[nodiscard]] std::span<const Individual> members() const noexcept { return members_; }
    [[nodiscard]] std::size_t peak_size() const noexcept { return peak_size_; }

    /// Index range [first, last) of members with lo <= g2 <= hi.
    [[nodiscard]] std::pair<std::size_t, std::size_t> g2_range(double lo, double hi) const noexcept;

    /// Number of members with g2 <= bound.
    [[nodiscard]] std::size_t count_g2_at_most(double bound) const noexcept;

    /// Feasible member with maximal g1, or nullptr.
    [[nodiscard]] const Individual* best_feasible() const noexcept;

private:
    std::vector<Individual> members_;
    std::size_t peak_size_ = 0;
};

}  // namespace ccsubmod
