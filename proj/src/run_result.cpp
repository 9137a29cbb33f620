#include "ccsubmod/run_result.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ccsubmod {

nlohmann::json to_json(const RunConfig& cfg) {
    nlohmann::json j;
    j["algorithm"] = to_string(cfg.algorithm);
    j["t_max"] = cfg.t_max;
    j["seed"] = cfg.seed;
    j["regime"] = to_string(cfg.regime);
    if (cfg.algorithm == Algorithm::nsga2) {
        j["population"] = cfg.nsga2.population;
        j["children"] = cfg.nsga2.children;
        j["crossover_probability"] = cfg.nsga2.crossover_probability;
    }
    j["trace"] = cfg.trace;
    return j;
}

RunConfig run_config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("run config must be a JSON object");
    RunConfig cfg;
    cfg.algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
    if (j.contains("t_max")) cfg.t_max = j["t_max"].get<std::uint64_t>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("regime")) cfg.regime = parse_regime(j["regime"].get<std::string>());
    if (j.contains("population")) cfg.nsga2.population = j["population"].get<std::size_t>();
    if (j.contains("children")) cfg.nsga2.children = j["children"].get<std::size_t>();
    if (j.contains("crossover_probability")) cfg.nsga2.crossover_probability = j["crossover_probability"].get<double>();
    if (j.contains("trace")) cfg.trace = j["trace"].get<bool>();
    cfg.validate();
    return cfg;
}

nlohmann::json to_json(const RunResult& result, bool include_wall_time) {
    nlohmann::json j;
    j["config"] = to_json(result.config);
    j["best_g1"] = result.best_g1;
    j["best_g2"] = result.best_g2;
    j["best_individual_bits"] = result.best_bits.to_hex();
    j["archive_size"] = result.archive_size;
    j["peak_archive_size"] = result.peak_archive_size;
    j["evaluations"] = result.evaluations;
    nlohmann::json front = nlohmann::json::array();
    for (const auto& o : result.front) front.push_back({o.g1, o.g2});
    j["front"] = front;
    if (include_wall_time) j["wall_time_s"] = result.wall_time_s;
    return j;
}

RunResult run_result_from_json(const nlohmann::json& j, std::size_t n) {
    RunResult r;
    r.config = run_config_from_json(j.at("config"));
    r.best_g1 = j.at("best_g1").get<double>();
    r.best_g2 = j.value("best_g2", 0.0);
    r.best_bits = BitVector::from_hex(j.at("best_individual_bits").get<std::string>(), n);
    r.archive_size = j.at("archive_size").get<std::size_t>();
    r.peak_archive_size = j.at("peak_archive_size").get<std::size_t>();
    r.evaluations = j.value("evaluations", std::uint64_t{0});
    if (j.contains("front"))
        for (const auto& p : j["front"]) r.front.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    r.wall_time_s = j.value("wall_time_s", 0.0);
    return r;
}

void write_trace_csv(const RunResult& result, std::ostream& out) {
    out << "t,parent_g2,g1,g2,accepted,in_window,window_size\n";
    char buf[256];
    for (const auto& rec : result.trace) {
        std::snprintf(buf, sizeof buf, "%llu,%.17g,%.17g,%.17g,%d,%d,%zu\n", static_cast<unsigned long long>(rec.t),
                      rec.parent_g2, rec.g1, rec.g2, rec.accepted ? 1 : 0, rec.in_window ? 1 : 0, rec.window_size);
        out << buf;
    }
}

}  // namespace ccsubmod
