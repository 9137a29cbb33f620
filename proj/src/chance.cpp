#include "ccsubmod/chance.hpp"

#include <cmath>
#include <stdexcept>

#include "ccsubmod/graph.hpp"

namespace ccsubmod {

std::string to_string(Regime regime) { return regime == Regime::surrogate_g2 ? "surrogate" : "expected"; }

Regime parse_regime(const std::string& name) {
    if (name == "surrogate" || name == "surrogate-g2") return Regime::surrogate_g2;
    if (name == "expected" || name == "expected-g2") return Regime::expected_g2;
    throw std::invalid_argument("unknown regime '" + name + "'");
}

namespace {

void check_length(const BitVector& x, const WeightModel& w) {
    if (x.size() != w.size()) throw std::invalid_argument("selection length does not match weight model");
}

double expected_weight_unchecked(const BitVector& x, const WeightModel& w, std::size_t count) {
    if (w.kind() == WeightKind::iid) return static_cast<double>(count) * static_cast<double>(w.min_expected());
    std::uint64_t total = 0;
    x.for_each_set([&](std::size_t i) { total += w.expected(i); });
    return static_cast<double>(total);
}

}  // namespace

double expected_weight(const BitVector& x, const WeightModel& w) {
    check_length(x, w);
    return expected_weight_unchecked(x, w, x.count());
}

double weight_variance(const BitVector& x, const WeightModel& w) {
    check_length(x, w);
    const double d = w.dispersion();
    return d * d * static_cast<double>(x.count()) / 3.0;
}

double surrogate_weight(double expected, std::size_t count, double dispersion, double alpha, SurrogateKind kind) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
    const auto k = static_cast<double>(count);
    switch (kind) {
        case SurrogateKind::chebyshev: {
            const double variance = dispersion * dispersion * k / 3.0;
            return expected + std::sqrt((1.0 - alpha) * variance / alpha);
        }
        case SurrogateKind::chernoff:
            return expected + std::sqrt(3.0 * dispersion * k * -std::log(alpha));
    }
    throw std::invalid_argument("unknown surrogate kind");
}

double surrogate_weight(const BitVector& x, const WeightModel& w, double alpha, SurrogateKind kind) {
    check_length(x, w);
    const auto count = x.count();
    return surrogate_weight(expected_weight_unchecked(x, w, count), count, w.dispersion(), alpha, kind);
}

Evaluation evaluate_full(const BitVector& x, const Instance& instance, Regime regime) {
    const auto& w = instance.weights();
    check_length(x, w);
    Evaluation e;
    e.count = x.count();
    e.expected = expected_weight_unchecked(x, w, e.count);
    e.surrogate = surrogate_weight(e.expected, e.count, w.dispersion(), instance.alpha(), instance.surrogate());
    e.objectives.g1 = e.surrogate <= instance.budget() ? static_cast<double>(coverage_count(instance.graph(), x))
                                                       : infeasible_g1;
    e.objectives.g2 = regime == Regime::surrogate_g2 ? e.surrogate : e.expected;
    return e;
}

}  // namespace ccsubmod
