#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccsubmod/algorithms.hpp"
#include "ccsubmod/experiment.hpp"
#include "ccsubmod/graph.hpp"
#include "ccsubmod/problem.hpp"
#include "ccsubmod/run_result.hpp"

namespace ccsubmod::cli {

namespace {

using nlohmann::json;

struct GraphFlags {
    std::string graph;
    std::string format = "auto";
};

struct RunFlags {
    GraphFlags g;
    std::string weights = "iid";
    std::uint64_t a = 1;
    std::optional<double> d;
    std::optional<double> budget;
    double alpha = 0.1;
    std::string surrogate = "cheb";
    std::string algo = "sw-gsemo";
    std::optional<std::uint64_t> tmax;
    std::uint64_t seed = 0;
    std::string regime = "auto";
    std::size_t population = 20;
    std::size_t children = 10;
    std::string trace;
    bool timing = false;
};

struct ExperimentFlags {
    std::string config;
    std::optional<std::size_t> workers;
    std::string out;
    bool resume = false;
};

// Thrown for anything the user can fix by changing flags or config.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_graph_flags(CLI::App* cmd, GraphFlags& f) {
    cmd->add_option("--graph", f.graph, "graph file (.mtx or edge list)")->required();
    cmd->add_option("--format", f.format, "mtx | edges | auto");
}

void add_run_flags(CLI::App* cmd, RunFlags& f) {
    add_graph_flags(cmd, f.g);
    cmd->add_option("--weights", f.weights, "iid | degree");
    cmd->add_option("--a", f.a, "expected weight of every node (iid)");
    cmd->add_option("--d", f.d, "dispersion; default 0.5 (iid) or 1 (degree)");
    cmd->add_option("--B", f.budget, "budget")->required();
    cmd->add_option("--alpha", f.alpha, "tolerated violation probability");
    cmd->add_option("--surrogate", f.surrogate, "cheb | chern");
    cmd->add_option("--algo", f.algo, "gsemo | sw-gsemo | nsga2");
    cmd->add_option("--tmax", f.tmax, "iterations (offspring evaluations)")->required();
    cmd->add_option("--seed", f.seed, "random seed");
    cmd->add_option("--regime", f.regime, "surrogate | expected | auto");
    cmd->add_option("--population", f.population, "NSGA-II population size");
    cmd->add_option("--children", f.children, "NSGA-II offspring per generation");
}

std::shared_ptr<const Graph> read_graph(const GraphFlags& f) {
    GraphFormat format;
    try {
        format = parse_graph_format(f.format);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return std::make_shared<const Graph>(load_graph(f.graph, format));
}

struct Prepared {
    std::shared_ptr<const Graph> graph;
    std::optional<Instance> instance;
    RunConfig config;
    json resolved;
};

Prepared prepare(const RunFlags& f, bool trace) {
    Prepared p;
    WeightKind kind;
    SurrogateKind surrogate;
    try {
        kind = parse_weight_kind(f.weights);
        surrogate = parse_surrogate_kind(f.surrogate);
        p.config.algorithm = parse_algorithm(f.algo);
        p.config.regime = f.regime == "auto" ? default_regime(kind) : parse_regime(f.regime);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    p.config.t_max = *f.tmax;
    p.config.seed = f.seed;
    p.config.nsga2.population = f.population;
    p.config.nsga2.children = f.children;
    p.config.trace = trace;
    const double d = f.d.value_or(kind == WeightKind::iid ? 0.5 : 1.0);

    p.graph = read_graph(f.g);
    try {
        p.config.validate();
        auto weights = kind == WeightKind::iid ? make_iid_weights(p.graph->node_count(), f.a, d)
                                               : make_degree_weights(*p.graph, d);
        p.instance.emplace(p.graph, std::move(weights), *f.budget, f.alpha, surrogate);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }

    InstanceSpec spec;
    spec.graph = f.g.graph;
    spec.format = parse_graph_format(f.g.format);
    spec.weights = kind;
    spec.a = f.a;
    spec.d = d;
    spec.budgets = {*f.budget};
    spec.alphas = {f.alpha};
    spec.surrogates = {surrogate};
    p.resolved = to_json(spec);
    p.resolved["nodes"] = p.graph->node_count();
    p.resolved["edges"] = p.graph->edge_count();
    return p;
}

int cmd_run(const RunFlags& f, std::ostream& out, std::ostream& err) {
    auto p = prepare(f, !f.trace.empty());
    auto result = run(*p.instance, p.config);
    if (!f.trace.empty()) {
        std::ofstream csv(f.trace);
        if (!csv) throw std::runtime_error("cannot write trace file '" + f.trace + "'");
        write_trace_csv(result, csv);
        err << "trace: " << result.trace.size() << " rows -> " << f.trace << '\n';
    }
    auto j = to_json(result, f.timing);
    j["instance"] = p.resolved;
    out << j.dump(2) << '\n';
    return exit_ok;
}

int cmd_trace(const RunFlags& f, const std::string& out_path, std::ostream& out, std::ostream& err) {
    auto p = prepare(f, true);
    const auto result = run(*p.instance, p.config);
    if (out_path.empty() || out_path == "-") {
        write_trace_csv(result, out);
    } else {
        std::ofstream csv(out_path);
        if (!csv) throw std::runtime_error("cannot write trace file '" + out_path + "'");
        write_trace_csv(result, csv);
    }
    err << "best_g1=" << result.best_g1 << " archive=" << result.archive_size << " rows=" << result.trace.size()
        << '\n';
    return exit_ok;
}

int cmd_inspect(const GraphFlags& f, std::ostream& out) {
    const auto g = read_graph(f);
    const std::size_t n = g->node_count();
    std::size_t min_deg = n == 0 ? 0 : g->degree(0), max_deg = 0, isolated = 0;
    for (NodeId v = 0; v < n; ++v) {
        const auto deg = g->degree(v);
        min_deg = std::min(min_deg, deg);
        max_deg = std::max(max_deg, deg);
        isolated += deg == 0;
    }
    json j;
    j["graph"] = f.graph;
    j["nodes"] = n;
    j["edges"] = g->edge_count();
    j["min_degree"] = min_deg;
    j["max_degree"] = max_deg;
    j["mean_degree"] = n == 0 ? 0.0 : 2.0 * static_cast<double>(g->edge_count()) / static_cast<double>(n);
    j["isolated_nodes"] = isolated;
    j["budgets"] = default_budgets(n);
    j["degree_weight_sum"] = 2 * g->edge_count() + n;
    out << j.dump(2) << '\n';
    return exit_ok;
}

int cmd_budgets(const GraphFlags& f, std::ostream& out) {
    const auto g = read_graph(f);
    const auto b = default_budgets(g->node_count());
    out << format_number(b[0]) << ' ' << format_number(b[1]) << ' ' << format_number(b[2]) << '\n';
    return exit_ok;
}

std::optional<std::size_t> env_workers() {
    const char* v = std::getenv("CCSUBMOD_WORKERS");
    if (v == nullptr || *v == '\0') return std::nullopt;
    try {
        const auto w = std::stoul(v);
        if (w == 0) throw ConfigError("CCSUBMOD_WORKERS must be positive");
        return w;
    } catch (const std::logic_error&) {
        throw ConfigError(std::string("bad CCSUBMOD_WORKERS value '") + v + "'");
    }
}

int cmd_experiment(const ExperimentFlags& f, std::ostream& out, std::ostream& err) {
    ExperimentConfig cfg;
    try {
        cfg = load_experiment_config(f.config);
        if (f.workers) cfg.workers = *f.workers;
        else if (const auto w = env_workers()) cfg.workers = *w;
        if (!f.out.empty()) cfg.output_dir = f.out;
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad experiment config: ") + e.what());
    }
    RunOptions options;
    options.resume = f.resume;
    options.log = &err;
    const auto results = run_experiment(cfg, options);
    write_outputs(cfg, results, &err);

    json summary;
    summary["output_dir"] = cfg.output_dir.string();
    summary["rows"] = results.rows.size();
    summary["cells"] = results.cells.size();
    summary["failures"] = results.failures();
    json failed = json::array();
    for (const auto& c : results.cells)
        if (!c.ok()) {
            failed.push_back({{"cell", c.cell_id}, {"error", *c.error}});
            err << "failed cell " << c.cell_id << ": " << *c.error << '\n';
        }
    summary["failed"] = failed;
    out << summary.dump(2) << '\n';
    return results.failures() == 0 ? exit_ok : exit_partial_failure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chance-constrained maximum coverage with evolutionary multi-objective algorithms", "ccsubmod"};
    app.require_subcommand(1, 1);

    GraphFlags inspect_flags, budget_flags;
    RunFlags run_flags, trace_flags;
    ExperimentFlags exp_flags;
    std::string trace_out;

    auto* inspect = app.add_subcommand("inspect-graph", "print graph statistics as JSON");
    add_graph_flags(inspect, inspect_flags);

    auto* budgets = app.add_subcommand("budgets", "print the three default budgets");
    add_graph_flags(budgets, budget_flags);

    auto* run_cmd = app.add_subcommand("run", "single run; prints the result as JSON");
    add_run_flags(run_cmd, run_flags);
    run_cmd->add_option("--trace", run_flags.trace, "write the per-iteration trace CSV here");
    run_cmd->add_flag("--timing", run_flags.timing, "include wall time in the JSON");

    auto* trace_cmd = app.add_subcommand("trace", "single run; prints the per-iteration trace CSV");
    add_run_flags(trace_cmd, trace_flags);
    trace_cmd->add_option("--out", trace_out, "output file (default stdout)");

    auto* exp = app.add_subcommand("experiment", "run an experiment grid");
    exp->add_option("--config", exp_flags.config, "experiment JSON file")->required();
    exp->add_option("--workers", exp_flags.workers, "parallel cells (default $CCSUBMOD_WORKERS or config)");
    exp->add_option("--out", exp_flags.out, "output directory (overrides config)");
    exp->add_flag("--resume", exp_flags.resume, "reuse cell results already on disk");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_config_error;
    }

    try {
        if (*inspect) return cmd_inspect(inspect_flags, out);
        if (*budgets) return cmd_budgets(budget_flags, out);
        if (*run_cmd) return cmd_run(run_flags, out, err);
        if (*trace_cmd) return cmd_trace(trace_flags, trace_out, out, err);
        if (*exp) return cmd_experiment(exp_flags, out, err);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return exit_config_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_runtime_error;
    }
    return exit_config_error;
}

}  // namespace ccsubmod::cli
