#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccsubmod/bitvector.hpp"
#include "ccsubmod/graph.hpp"
#include "ccsubmod/rng.hpp"

namespace ccsubmod {

enum class WeightKind { iid, same_dispersion };

/// Tail bound used to turn the chance constraint into a deterministic one.
enum class SurrogateKind { chebyshev, chernoff };

std::string to_string(WeightKind kind);
std::string to_string(SurrogateKind kind);
WeightKind parse_weight_kind(const std::string& name);  // "iid" | "degree" | "same-dispersion"
SurrogateKind parse_surrogate_kind(const std::string& name);  // "chebyshev"/"cheb" | "chernoff"/"chern"

/// Element weights W(v_i) ~ U[a_i - d, a_i + d] with integer means a_i.
class WeightModel {
public:
    [[nodiscard]] WeightKind kind() const noexcept { return kind_; }
    [[nodiscard]] double dispersion() const noexcept { return dispersion_; }
    [[nodiscard]] std::size_t size() const noexcept { return expected_.size(); }
    [[nodiscard]] std::uint64_t expected(std::size_t i) const noexcept { return expected_[i]; }
    [[nodiscard]] const std::vector<std::uint64_t>& expected() const noexcept { return expected_; }
    [[nodiscard]] std::uint64_t min_expected() const noexcept { return min_expected_; }
    [[nodiscard]] std::uint64_t max_expected() const noexcept { return max_expected_; }

    /// Draws realized weights for every element.
    [[nodiscard]] std::vector<double> sample(Rng& rng) const;
    /// Draws W(x) for a single selection.
    [[nodiscard]] double sample_total(const BitVector& x, Rng& rng) const;

    friend WeightModel make_iid_weights(std::size_t n, std::uint64_t a, double d);
    friend WeightModel make_degree_weights(const Graph& graph, double d);
    friend bool operator==(const WeightModel&, const WeightModel&) = default;

private:
    WeightModel(WeightKind kind, std::vector<std::uint64_t> expected, double dispersion);

    WeightKind kind_ = WeightKind::iid;
    std::vector<std::uint64_t> expected_;
    double dispersion_ = 0.0;
    std::uint64_t min_expected_ = 0;
    std::uint64_t max_expected_ = 0;
};

/// All n elements share mean a. Requires a >= 1 and 0 < d <= a.
WeightModel make_iid_weights(std::size_t n, std::uint64_t a, double d);

/// Mean of node v is degree(v) + 1. Requires 0 < d <= min mean.
WeightModel make_degree_weights(const Graph& graph, double d);

/// floor(sqrt(n)), floor(n/20), floor(n/10).
std::vector<double> default_budgets(std::size_t n);

/// A chance-constrained maximum coverage instance: maximize coverage subject
/// to Pr[W(x) > budget] <= alpha.
class Instance {
public:
    Instance(std::shared_ptr<const Graph> graph, WeightModel weights, double budget, double alpha,
             SurrogateKind surrogate);

    [[nodiscard]] const Graph& graph() const noexcept { return *graph_; }
    [[nodiscard]] const std::shared_ptr<const Graph>& graph_ptr() const noexcept { return graph_; }
    [[nodiscard]] const WeightModel& weights() const noexcept { return weights_; }
    [[nodiscard]] double budget() const noexcept { return budget_; }
    [[nodiscard]] double alpha() const noexcept { return alpha_; }
    [[nodiscard]] SurrogateKind surrogate() const noexcept { return surrogate_; }
    [[nodiscard]] std::size_t size() const noexcept { return weights_.size(); }

private:
    std::shared_ptr<const Graph> graph_;
    WeightModel weights_;
    double budget_;
    double alpha_;
    SurrogateKind surrogate_;
};

/// Declarative instance description as stored in config files.
struct InstanceSpec {
    std::filesystem::path graph;
    GraphFormat format = GraphFormat::automatic;
    WeightKind weights = WeightKind::iid;
    std::uint64_t a = 1;
    double d = 0.5;
    std::vector<double> budgets;  // empty means the default grid
    std::vector<double> alphas{0.1};
    std::vector<SurrogateKind> surrogates{SurrogateKind::chebyshev};
};

/// Keys: graph, format, weights, a, d, budget (number | list | "grid"), alpha
/// (number | list), surrogate (name | list). Throws std::invalid_argument.
InstanceSpec instance_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const InstanceSpec& spec);

}  // namespace ccsubmod
