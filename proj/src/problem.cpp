#include "ccsubmod/problem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ccsubmod {

std::string to_string(WeightKind kind) { return kind == WeightKind::iid ? "iid" : "degree"; }

std::string to_string(SurrogateKind kind) { return kind == SurrogateKind::chebyshev ? "chebyshev" : "chernoff"; }

WeightKind parse_weight_kind(const std::string& name) {
    if (name == "iid") return WeightKind::iid;
    if (name == "degree" || name == "same-dispersion" || name == "uwd") return WeightKind::same_dispersion;
    throw std::invalid_argument("unknown weight kind '" + name + "'");
}

SurrogateKind parse_surrogate_kind(const std::string& name) {
    if (name == "chebyshev" || name == "cheb") return SurrogateKind::chebyshev;
    if (name == "chernoff" || name == "chern") return SurrogateKind::chernoff;
    throw std::invalid_argument("unknown surrogate '" + name + "'");
}

WeightModel::WeightModel(WeightKind kind, std::vector<std::uint64_t> expected, double dispersion)
    : kind_(kind), expected_(std::move(expected)), dispersion_(dispersion) {
    if (!expected_.empty()) {
        const auto [lo, hi] = std::minmax_element(expected_.begin(), expected_.end());
        min_expected_ = *lo;
        max_expected_ = *hi;
    }
    if (!(dispersion_ > 0.0)) throw std::invalid_argument("dispersion must be positive");
    if (!expected_.empty() && dispersion_ > static_cast<double>(min_expected_))
        throw std::invalid_argument("dispersion exceeds the smallest expected weight");
}

std::vector<double> WeightModel::sample(Rng& rng) const {
    std::vector<double> out(expected_.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto mean = static_cast<double>(expected_[i]);
        out[i] = rng.uniform(mean - dispersion_, mean + dispersion_);
    }
    return out;
}

double WeightModel::sample_total(const BitVector& x, Rng& rng) const {
    double total = 0.0;
    x.for_each_set([&](std::size_t i) {
        const auto mean = static_cast<double>(expected_[i]);
        total += rng.uniform(mean - dispersion_, mean + dispersion_);
    });
    return total;
}

WeightModel make_iid_weights(std::size_t n, std::uint64_t a, double d) {
    if (a == 0) throw std::invalid_argument("expected weight must be a positive integer");
    if (!(d > 0.0) || d > static_cast<double>(a)) throw std::invalid_argument("dispersion must satisfy 0 < d <= a");
    return WeightModel(WeightKind::iid, std::vector<std::uint64_t>(n, a), d);
}

WeightModel make_degree_weights(const Graph& graph, double d) {
    std::vector<std::uint64_t> expected(graph.node_count());
    for (std::size_t v = 0; v < expected.size(); ++v) expected[v] = graph.degree(static_cast<NodeId>(v)) + 1;
    const auto min_mean = expected.empty() ? 1 : *std::min_element(expected.begin(), expected.end());
    if (!(d > 0.0) || d > static_cast<double>(min_mean))
        throw std::invalid_argument("dispersion must satisfy 0 < d <= min_i (D(v_i) + 1)");
    return WeightModel(WeightKind::same_dispersion, std::move(expected), d);
}

std::vector<double> default_budgets(std::size_t n) {
    if (n == 0) throw std::invalid_argument("node count must be positive");
    auto root = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    while (root * root > n) --root;
    while ((root + 1) * (root + 1) <= n) ++root;
    return {static_cast<double>(root), static_cast<double>(n / 20), static_cast<double>(n / 10)};
}

Instance::Instance(std::shared_ptr<const Graph> graph, WeightModel weights, double budget, double alpha,
                   SurrogateKind surrogate)
    : graph_(std::move(graph)), weights_(std::move(weights)), budget_(budget), alpha_(alpha), surrogate_(surrogate) {
    if (!graph_) throw std::invalid_argument("instance requires a graph");
    if (weights_.size() != graph_->node_count()) throw std::invalid_argument("weight model size does not match graph");
    if (!(budget_ > 0.0) || !std::isfinite(budget_)) throw std::invalid_argument("budget must be positive");
    if (!(alpha_ > 0.0 && alpha_ < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
}

namespace {

template <class T, class F>
std::vector<T> scalar_or_list(const nlohmann::json& j, F&& convert) {
    std::vector<T> out;
    if (j.is_array()) {
        for (const auto& item : j) out.push_back(convert(item));
    } else {
        out.push_back(convert(j));
    }
    return out;
}

double as_number(const nlohmann::json& j, const char* key) {
    if (!j.is_number()) throw std::invalid_argument(std::string("'") + key + "' must be a number");
    return j.get<double>();
}

}  // namespace

InstanceSpec instance_spec_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("instance must be a JSON object");
    InstanceSpec spec;
    if (!j.contains("graph") || !j["graph"].is_string()) throw std::invalid_argument("instance needs a 'graph' path");
    spec.graph = j["graph"].get<std::string>();
    if (j.contains("format")) spec.format = parse_graph_format(j["format"].get<std::string>());
    if (j.contains("weights")) spec.weights = parse_weight_kind(j["weights"].get<std::string>());
    if (j.contains("a")) {
        const double a = as_number(j["a"], "a");
        if (a < 1 || a != std::floor(a)) throw std::invalid_argument("'a' must be a positive integer");
        spec.a = static_cast<std::uint64_t>(a);
    }
    spec.d = spec.weights == WeightKind::iid ? 0.5 : 1.0;
    if (j.contains("d")) spec.d = as_number(j["d"], "d");
    if (j.contains("budget")) {
        const auto& b = j["budget"];
        if (!(b.is_string() && b.get<std::string>() == "grid"))
            spec.budgets = scalar_or_list<double>(b, [](const nlohmann::json& v) { return as_number(v, "budget"); });
    }
    if (j.contains("alpha"))
        spec.alphas = scalar_or_list<double>(j["alpha"], [](const nlohmann::json& v) { return as_number(v, "alpha"); });
    if (j.contains("surrogate"))
        spec.surrogates = scalar_or_list<SurrogateKind>(
            j["surrogate"], [](const nlohmann::json& v) { return parse_surrogate_kind(v.get<std::string>()); });
    if (spec.alphas.empty() || spec.surrogates.empty()) throw std::invalid_argument("empty alpha or surrogate list");
    for (const auto alpha : spec.alphas)
        if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
    for (const auto budget : spec.budgets)
        if (!(budget > 0.0)) throw std::invalid_argument("budget must be positive");
    return spec;
}

nlohmann::json to_json(const InstanceSpec& spec) {
    nlohmann::json j;
    j["graph"] = spec.graph.string();
    j["format"] = spec.format == GraphFormat::matrix_market ? "matrix-market"
                  : spec.format == GraphFormat::edge_list   ? "edge-list"
                                                            : "auto";
    j["weights"] = to_string(spec.weights);
    j["a"] = spec.a;
    j["d"] = spec.d;
    if (spec.budgets.empty()) j["budget"] = "grid";
    else j["budget"] = spec.budgets;
    j["alpha"] = spec.alphas;
    nlohmann::json surrogates = nlohmann::json::array();
    for (const auto s : spec.surrogates) surrogates.push_back(to_string(s));
    j["surrogate"] = surrogates;
    return j;
}

}  // namespace ccsubmod
