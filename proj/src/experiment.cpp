#include "ccsubmod/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ccsubmod/graph.hpp"
#include "ccsubmod/rng.hpp"
#include "ccsubmod/run_result.hpp"

namespace ccsubmod {

Regime default_regime(WeightKind weights) {
    return weights == WeightKind::same_dispersion ? Regime::expected_g2 : Regime::surrogate_g2;
}

void ExperimentConfig::validate() const {
    if (instances.empty()) throw std::invalid_argument("experiment has no instances");
    if (algorithms.empty()) throw std::invalid_argument("experiment has no algorithms");
    if (t_max.empty()) throw std::invalid_argument("experiment has no t_max values");
    if (repetitions < 1) throw std::invalid_argument("repetitions must be at least 1");
    if (workers < 1) throw std::invalid_argument("workers must be at least 1");
    for (const auto& a : algorithms) a.run.validate();
}

ExperimentConfig experiment_config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir) {
    if (!j.is_object()) throw std::invalid_argument("experiment config must be a JSON object");
    ExperimentConfig cfg;
    if (j.contains("instances")) {
        for (const auto& item : j["instances"]) {
            auto spec = instance_spec_from_json(item);
            if (spec.graph.is_relative() && !base_dir.empty()) spec.graph = base_dir / spec.graph;
            cfg.instances.push_back(std::move(spec));
        }
    }
    if (j.contains("algorithms")) {
        for (const auto& item : j["algorithms"]) {
            AlgorithmSpec a;
            a.run = run_config_from_json(item);
            a.label = item.value("label", to_string(a.run.algorithm));
            if (item.contains("regime")) a.regime = parse_regime(item["regime"].get<std::string>());
            a.trace = item.value("trace", false);
            a.run.trace = false;
            cfg.algorithms.push_back(std::move(a));
        }
    }
    if (j.contains("tmax")) {
        cfg.t_max.clear();
        const auto& t = j["tmax"];
        if (t.is_array())
            for (const auto& v : t) cfg.t_max.push_back(v.get<std::uint64_t>());
        else
            cfg.t_max.push_back(t.get<std::uint64_t>());
    }
    if (j.contains("repetitions")) cfg.repetitions = j["repetitions"].get<std::size_t>();
    if (j.contains("base_seed")) cfg.base_seed = j["base_seed"].get<std::uint64_t>();
    if (j.contains("output_dir")) {
        cfg.output_dir = j["output_dir"].get<std::string>();
        if (cfg.output_dir.is_relative() && !base_dir.empty()) cfg.output_dir = base_dir / cfg.output_dir;
    }
    if (j.contains("workers")) cfg.workers = j["workers"].get<std::size_t>();
    return cfg;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open experiment config '" + path.string() + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed experiment config: " + std::string(e.what()));
    }
    return experiment_config_from_json(j, path.parent_path());
}

nlohmann::json to_json(const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["instances"] = nlohmann::json::array();
    for (const auto& i : cfg.instances) j["instances"].push_back(to_json(i));
    j["algorithms"] = nlohmann::json::array();
    for (const auto& a : cfg.algorithms) {
        auto item = to_json(a.run);
        item.erase("t_max");
        item.erase("seed");
        item.erase("trace");
        item["label"] = a.label;
        if (a.regime) item["regime"] = to_string(*a.regime);
        else item.erase("regime");
        item["trace"] = a.trace;
        j["algorithms"].push_back(item);
    }
    j["tmax"] = cfg.t_max;
    j["repetitions"] = cfg.repetitions;
    j["base_seed"] = cfg.base_seed;
    j["output_dir"] = cfg.output_dir.string();
    j["workers"] = cfg.workers;
    return j;
}

std::vector<double> CellResult::best_values() const {
    std::vector<double> out;
    out.reserve(runs.size());
    for (const auto& r : runs) out.push_back(r.best_g1);
    return out;
}

const CellResult* ResultSet::find(std::size_t row, std::size_t algorithm) const {
    const std::size_t idx = row * algorithm_labels.size() + algorithm;
    if (idx >= cells.size()) return nullptr;
    return &cells[idx];
}

std::size_t ResultSet::failures() const {
    return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const auto& c) { return !c.ok(); }));
}

namespace {

struct LoadedGraph {
    std::shared_ptr<const Graph> graph;
    std::string error;
};

using GraphCache = std::map<std::string, LoadedGraph>;

const LoadedGraph& cached_graph(GraphCache& cache, const InstanceSpec& spec) {
    const auto key = spec.graph.string();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    LoadedGraph lg;
    try {
        lg.graph = std::make_shared<const Graph>(load_graph(spec.graph, spec.format));
    } catch (const std::exception& e) {
        lg.error = e.what();
    }
    return cache.emplace(key, std::move(lg)).first->second;
}

std::vector<RowKey> expand_with_cache(const ExperimentConfig& cfg, GraphCache& cache) {
    std::vector<RowKey> rows;
    for (std::size_t ii = 0; ii < cfg.instances.size(); ++ii) {
        const auto& spec = cfg.instances[ii];
        std::vector<double> budgets = spec.budgets;
        if (budgets.empty()) {
            const auto& lg = cached_graph(cache, spec);
            if (lg.graph) budgets = default_budgets(lg.graph->node_count());
            else budgets = {0.0};  // placeholder row; its cells fail with the load error
        }
        for (const auto surrogate : spec.surrogates)
            for (const auto budget : budgets)
                for (const auto t_max : cfg.t_max)
                    for (const auto alpha : spec.alphas)
                        rows.push_back({spec.graph.stem().string(), spec.weights, surrogate, budget, t_max, alpha, ii});
    }
    return rows;
}

nlohmann::json row_to_json(const RowKey& row) {
    return {{"graph", row.graph},     {"weights", to_string(row.weights)}, {"surrogate", to_string(row.surrogate)},
            {"budget", row.budget},   {"t_max", row.t_max},                {"alpha", row.alpha},
            {"instance", row.instance_index}};
}

std::string slug(const std::string& label) {
    std::string out;
    for (const char c : label) out += (std::isalnum(static_cast<unsigned char>(c)) != 0) ? c : '_';
    return out;
}

nlohmann::json cell_to_json(const CellResult& cell, const std::string& label) {
    nlohmann::json j;
    j["cell_id"] = cell.cell_id;
    j["row"] = row_to_json(cell.row);
    j["algorithm"] = label;
    j["runs"] = nlohmann::json::array();
    for (const auto& r : cell.runs) j["runs"].push_back(to_json(r, true));
    j["error"] = cell.error ? nlohmann::json(*cell.error) : nlohmann::json(nullptr);
    return j;
}

bool try_resume(CellResult& cell, const std::filesystem::path& file, const std::vector<RunConfig>& expected,
                std::size_t n) {
    std::ifstream in(file);
    if (!in) return false;
    try {
        nlohmann::json j;
        in >> j;
        if (!j.at("error").is_null()) return false;
        if (j.at("row") != row_to_json(cell.row)) return false;
        std::vector<RunResult> runs;
        for (const auto& r : j.at("runs")) runs.push_back(run_result_from_json(r, n));
        if (runs.size() != expected.size()) return false;
        for (std::size_t i = 0; i < runs.size(); ++i)
            if (!(runs[i].config == expected[i])) return false;
        cell.runs = std::move(runs);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
        out << text;
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace

std::vector<RowKey> expand_rows(const ExperimentConfig& cfg) {
    GraphCache cache;
    return expand_with_cache(cfg, cache);
}

ResultSet run_experiment(const ExperimentConfig& cfg, const RunOptions& options) {
    cfg.validate();
    GraphCache cache;
    ResultSet results;
    for (const auto& a : cfg.algorithms) results.algorithm_labels.push_back(a.label);
    results.rows = expand_with_cache(cfg, cache);

    for (std::size_t r = 0; r < results.rows.size(); ++r) {
        for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
            CellResult cell;
            cell.row = results.rows[r];
            cell.row_index = r;
            cell.algorithm_index = a;
            char id[64];
            std::snprintf(id, sizeof id, "row%04zu-alg%02zu-", r, a);
            cell.cell_id = id + slug(cfg.algorithms[a].label);
            results.cells.push_back(std::move(cell));
        }
    }

    const auto cells_dir = cfg.output_dir / "cells";
    if (options.write_files) std::filesystem::create_directories(cells_dir);

    std::mutex log_mutex;
    const auto log = [&](const std::string& msg) {
        if (options.log == nullptr) return;
        std::lock_guard lock(log_mutex);
        *options.log << msg << '\n';
    };

    const auto process = [&](CellResult& cell) {
        const auto& spec = cfg.instances[cell.row.instance_index];
        const auto& algo = cfg.algorithms[cell.algorithm_index];
        const auto file = cells_dir / (cell.cell_id + ".json");
        try {
            const auto& lg = cached_graph(cache, spec);
            if (!lg.graph) throw std::runtime_error(lg.error);
            std::vector<RunConfig> configs;
            for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) {
                RunConfig rc = algo.run;
                rc.t_max = cell.row.t_max;
                rc.seed = derive_seed(cfg.base_seed, rep);
                rc.regime = algo.regime.value_or(default_regime(spec.weights));
                rc.trace = algo.trace && rep == 0 && options.write_files;
                configs.push_back(rc);
            }
            if (options.resume && try_resume(cell, file, configs, lg.graph->node_count())) {
                log("resumed " + cell.cell_id);
                return;
            }
            WeightModel weights = spec.weights == WeightKind::iid
                                      ? make_iid_weights(lg.graph->node_count(), spec.a, spec.d)
                                      : make_degree_weights(*lg.graph, spec.d);
            const Instance instance(lg.graph, std::move(weights), cell.row.budget, cell.row.alpha, cell.row.surrogate);
            for (const auto& rc : configs) {
                auto run_result = run(instance, rc);
                if (rc.trace) {
                    std::ostringstream csv;
                    write_trace_csv(run_result, csv);
                    write_text_file(cfg.output_dir / ("trace_" + cell.cell_id + ".csv"), csv.str());
                    run_result.trace.clear();
                }
                cell.runs.push_back(std::move(run_result));
            }
            log("finished " + cell.cell_id);
        } catch (const std::exception& e) {
            cell.runs.clear();
            cell.error = e.what();
            log("FAILED " + cell.cell_id + ": " + e.what());
        }
        if (options.write_files) {
            try {
                write_text_file(file, cell_to_json(cell, algo.label).dump(1) + "\n");
            } catch (const std::exception& e) {
                log("cannot persist " + cell.cell_id + ": " + e.what());
            }
        }
    };

    // The cache is only read from here on.
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < results.cells.size(); i = next++) process(results.cells[i]);
    };
    const std::size_t threads = std::min(cfg.workers, std::max<std::size_t>(1, results.cells.size()));
    if (threads <= 1) {
        worker();
    } else {
        for (const auto& spec : cfg.instances) cached_graph(cache, spec);
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return results;
}

nlohmann::json to_json(const ResultSet& results, const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["config"] = to_json(cfg);
    j["algorithms"] = results.algorithm_labels;
    j["cells"] = nlohmann::json::array();
    for (const auto& cell : results.cells) j["cells"].push_back(cell_to_json(cell, results.algorithm_labels[cell.algorithm_index]));
    return j;
}

void write_outputs(const ExperimentConfig& cfg, const ResultSet& results, std::ostream* log) {
    std::filesystem::create_directories(cfg.output_dir);
    write_text_file(cfg.output_dir / "results.json", to_json(results, cfg).dump(1) + "\n");
    std::ostringstream csv, md;
    auto warnings = emit_table_csv(results, csv);
    emit_table_markdown(results, md);
    write_text_file(cfg.output_dir / "table.csv", csv.str());
    write_text_file(cfg.output_dir / "table.md", md.str());
    if (log != nullptr)
        for (const auto& w : warnings) *log << "warning: " << w << '\n';
}

}  // namespace ccsubmod
