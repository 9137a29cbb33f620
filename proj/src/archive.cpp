#include "ccsubmod/archive.hpp"

#include <algorithm>

namespace ccsubmod {

InsertOutcome ParetoArchive::insert(Individual y) {
    const auto by_g2 = [](const Individual& m, double g2) { return m.obj.g2 < g2; };
    auto pos = static_cast<std::size_t>(
        std::lower_bound(members_.begin(), members_.end(), y.obj.g2, by_g2) - members_.begin());

    // Among members with g2 <= y.g2 the last one has the largest g1.
    std::size_t probe = pos;
    if (!(pos < members_.size() && members_[pos].obj.g2 == y.obj.g2)) probe = pos == 0 ? members_.size() : pos - 1;
    if (probe < members_.size() && strictly_dominates(members_[probe].obj, y.obj)) return InsertOutcome::rejected;

    std::size_t end = pos;
    while (end < members_.size() && members_[end].obj.g1 <= y.obj.g1) ++end;
    if (end > pos) {
        members_[pos] = std::move(y);
        members_.erase(members_.begin() + static_cast<std::ptrdiff_t>(pos) + 1,
                       members_.begin() + static_cast<std::ptrdiff_t>(end));
    } else {
        members_.insert(members_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(y));
    }
    peak_size_ = std::max(peak_size_, members_.size());
    return InsertOutcome::accepted;
}

std::pair<std::size_t, std::size_t> ParetoArchive::g2_range(double lo, double hi) const noexcept {
    const auto first = std::lower_bound(members_.begin(), members_.end(), lo,
                                        [](const Individual& m, double v) { return m.obj.g2 < v; });
    const auto last = std::upper_bound(first, members_.end(), hi,
                                       [](double v, const Individual& m) { return v < m.obj.g2; });
    return {static_cast<std::size_t>(first - members_.begin()), static_cast<std::size_t>(last - members_.begin())};
}

std::size_t ParetoArchive::count_g2_at_most(double bound) const noexcept {
    const auto last = std::upper_bound(members_.begin(), members_.end(), bound,
                                       [](double v, const Individual& m) { return v < m.obj.g2; });
    return static_cast<std::size_t>(last - members_.begin());
}

const Individual* ParetoArchive::best_feasible() const noexcept {
    if (members_.empty() || !members_.back().obj.feasible()) return nullptr;
    return &members_.back();
}

}  // namespace ccsubmod
