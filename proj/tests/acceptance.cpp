// Acceptance checks: one PASS/FAIL/SKIP line per criterion.
//
//   acceptance [--criteria 1,2,...] [--data-dir DIR]
//
// Exit: 0 all selected criteria passed, 1 any failure, 77 nothing failed but
// something was skipped (missing graph files).

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccsubmod/algorithms.hpp"
#include "ccsubmod/archive.hpp"
#include "ccsubmod/experiment.hpp"
#include "ccsubmod/stats.hpp"
#include "test_util.hpp"

#ifndef CCSUBMOD_SOURCE_DIR
#define CCSUBMOD_SOURCE_DIR "."
#endif
#ifndef CCSUBMOD_TEST_DATA
#define CCSUBMOD_TEST_DATA "tests/data"
#endif

using namespace ccsubmod;
namespace fs = std::filesystem;

namespace {

// Tolerances, pinned.
constexpr std::size_t kReps = 10;
constexpr std::size_t kExactRunsNeeded = 9;         // criteria 1-3: exact in >= 9/10 runs
constexpr double kOrderingMargin = 200.0;           // criterion 4
constexpr double kTradeoffLo = 120, kTradeoffHi = 147;  // criterion 5
constexpr std::size_t kSoundnessSolutions = 100;    // criterion 7
constexpr int kSoundnessSamples = 100000;
constexpr double kSoundnessSigmas = 3.0;
constexpr std::size_t kOracleInstances = 20;        // criterion 8
constexpr std::uint64_t kOracleTmax = 100000;
constexpr std::size_t kOracleRunsNeeded = 19;
constexpr double kStatsTol = 1e-9;                  // criterion 9

enum class Status { pass, fail, skip };

struct Verdict {
    Status status;
    std::string detail;
};

Verdict pass(std::string d) { return {Status::pass, std::move(d)}; }
Verdict fail(std::string d) { return {Status::fail, std::move(d)}; }
Verdict skip(std::string d) { return {Status::skip, std::move(d)}; }
Verdict check(bool ok, std::string d) { return {ok ? Status::pass : Status::fail, std::move(d)}; }

std::string fmt(double v) { return format_number(v); }

void progress(const std::string& msg) { std::cerr << "  .. " << msg << std::endl; }

// ---------------------------------------------------------------- datasets

struct Datasets {
    fs::path dir;
    std::map<std::string, std::shared_ptr<const Graph>> cache;

    std::optional<fs::path> locate(const std::vector<std::string>& names) const {
        for (const auto& name : names)
            for (const auto* ext : {".mtx", ".edges", ".txt", ""}) {
                const auto p = dir / (name + ext);
                if (fs::is_regular_file(p)) return p;
            }
        return std::nullopt;
    }

    std::shared_ptr<const Graph> get(const std::string& key, const std::vector<std::string>& names) {
        if (auto it = cache.find(key); it != cache.end()) return it->second;
        std::shared_ptr<const Graph> g;
        if (const auto p = locate(names)) g = std::make_shared<const Graph>(load_graph(*p));
        cache[key] = g;
        return g;
    }

    std::shared_ptr<const Graph> csphd() { return get("csphd", {"ca-CSphd", "ca-csphd", "CSphd"}); }
    std::shared_ptr<const Graph> grqc() { return get("grqc", {"ca-GrQc", "ca-grqc", "CA-GrQc"}); }
    std::shared_ptr<const Graph> condmat() {
        return get("condmat", {"ca-CondMat", "ca-CondaMat", "ca-condmat", "CA-CondMat"});
    }
};

std::string missing(const Datasets& d, const std::string& what) {
    return "graph file " + what + " not found in " + d.dir.string() +
           " (set CCSUBMOD_DATA_DIR; see README for the download step)";
}

struct Sample {
    std::vector<double> best;
    std::vector<std::size_t> peak;
    std::vector<std::size_t> final_size;

    std::size_t count_equal(double v) const { return std::count(best.begin(), best.end(), v); }
};

Sample repeat(const Instance& inst, Algorithm alg, std::uint64_t t_max, Regime regime, std::size_t reps) {
    Sample s;
    for (std::size_t rep = 0; rep < reps; ++rep) {
        RunConfig cfg;
        cfg.algorithm = alg;
        cfg.t_max = t_max;
        cfg.seed = derive_seed(1, rep);
        cfg.regime = regime;
        const auto r = run(inst, cfg);
        s.best.push_back(r.best_g1);
        s.peak.push_back(r.peak_archive_size);
        s.final_size.push_back(r.archive_size);
    }
    return s;
}

std::string summarize(const Sample& s) {
    std::ostringstream o;
    o << "[";
    for (std::size_t i = 0; i < s.best.size(); ++i) o << (i ? " " : "") << fmt(s.best[i]);
    o << "]";
    return o.str();
}

// Peak archive sizes of every IID run of criteria 1, 2 and 4, for criterion 5.
struct PeakRecord {
    std::string where;
    std::size_t peak;
    std::size_t bound;
};
std::vector<PeakRecord> g_iid_peaks;

struct ExactCase {
    std::string label;
    WeightKind weights;
    double d;
    double alpha;
    SurrogateKind surrogate;
    double expected;
};

Verdict exact_cases(Datasets& data, const std::vector<ExactCase>& cases) {
    const auto g = data.csphd();
    if (!g) return skip(missing(data, "ca-CSphd"));
    if (g->node_count() != 1882) return fail("ca-CSphd has " + std::to_string(g->node_count()) + " nodes, expected 1882");
    bool ok = true;
    std::ostringstream detail;
    for (const auto& c : cases) {
        auto w = c.weights == WeightKind::iid ? make_iid_weights(g->node_count(), 1, c.d) : make_degree_weights(*g, c.d);
        const Instance inst(g, std::move(w), 43, c.alpha, c.surrogate);
        const auto regime = default_regime(c.weights);
        for (const auto alg : {Algorithm::gsemo, Algorithm::sw_gsemo}) {
            progress(c.label + " " + to_string(alg));
            const auto s = repeat(inst, alg, 1500000, regime, kReps);
            const auto hits = s.count_equal(c.expected);
            ok = ok && hits >= kExactRunsNeeded;
            detail << c.label << " " << to_string(alg) << " " << hits << "/" << kReps << "=" << fmt(c.expected) << " "
                   << summarize(s) << "; ";
            if (c.weights == WeightKind::iid)
                for (const auto p : s.peak)
                    g_iid_peaks.push_back({c.label, p, iid_population_bound(g->node_count(), 43, 1)});
        }
    }
    return check(ok, detail.str());
}

Verdict criterion1(Datasets& data) {
    return exact_cases(data, {{"cheb a=0.1", WeightKind::iid, 0.5, 0.1, SurrogateKind::chebyshev, 546}});
}

Verdict criterion2(Datasets& data) {
    return exact_cases(data, {{"chern a=0.1", WeightKind::iid, 0.5, 0.1, SurrogateKind::chernoff, 478},
                              {"chern a=0.001", WeightKind::iid, 0.5, 0.001, SurrogateKind::chernoff, 413}});
}

Verdict criterion3(Datasets& data) {
    return exact_cases(data, {{"deg cheb a=0.1", WeightKind::same_dispersion, 1.0, 0.1, SurrogateKind::chebyshev, 38},
                              {"deg cheb a=0.001", WeightKind::same_dispersion, 1.0, 0.001, SurrogateKind::chebyshev, 22},
                              {"deg chern a=0.1", WeightKind::same_dispersion, 1.0, 0.1, SurrogateKind::chernoff, 36},
                              {"deg chern a=0.001", WeightKind::same_dispersion, 1.0, 0.001, SurrogateKind::chernoff, 33}});
}

Verdict criterion4(Datasets& data) {
    const auto g = data.grqc();
    if (!g) return skip(missing(data, "ca-GrQc"));
    if (g->node_count() != 4158) return fail("ca-GrQc has " + std::to_string(g->node_count()) + " nodes, expected 4158");
    const Instance inst(g, make_iid_weights(g->node_count(), 1, 0.5), 207, 0.1, SurrogateKind::chebyshev);
    progress("GrQc gsemo");
    const auto gs = repeat(inst, Algorithm::gsemo, 500000, Regime::surrogate_g2, kReps);
    progress("GrQc sw-gsemo");
    const auto sw = repeat(inst, Algorithm::sw_gsemo, 500000, Regime::surrogate_g2, kReps);
    for (const auto* s : {&gs, &sw})
        for (const auto p : s->peak) g_iid_peaks.push_back({"GrQc", p, iid_population_bound(g->node_count(), 207, 1)});
    const double m_gs = stats::mean(gs.best), m_sw = stats::mean(sw.best);
    return check(m_sw - m_gs >= kOrderingMargin, "mean SW-GSEMO " + fmt(m_sw) + " vs GSEMO " + fmt(m_gs) +
                                                     " (margin " + fmt(m_sw - m_gs) + ", need >= " +
                                                     fmt(kOrderingMargin) + ")");
}

Verdict criterion5(Datasets& data) {
    std::ostringstream detail;
    bool ran_any = false;
    bool ok = true;
    std::size_t violations = 0;
    for (const auto& r : g_iid_peaks) violations += r.peak > r.bound;
    if (!g_iid_peaks.empty()) {
        ran_any = true;
        ok = violations == 0;
        detail << g_iid_peaks.size() << " IID runs from criteria 1/2/4, " << violations << " above the bound; ";
    } else {
        detail << "no IID runs from criteria 1/2/4 (graphs missing); ";
    }
    const auto g = data.condmat();
    if (g) {
        ran_any = true;
        if (g->node_count() != 21363) {
            ok = false;
            detail << "ca-CondMat has " << g->node_count() << " nodes, expected 21363; ";
        } else {
            const Instance inst(g, make_iid_weights(g->node_count(), 1, 0.5), 146, 0.1, SurrogateKind::chebyshev);
            const auto bound = iid_population_bound(g->node_count(), 146, 1);
            for (const auto alg : {Algorithm::gsemo, Algorithm::sw_gsemo}) {
                progress("CondMat trade-offs " + to_string(alg));
                const auto s = repeat(inst, alg, 500000, Regime::surrogate_g2, 3);
                std::vector<double> sizes(s.final_size.begin(), s.final_size.end());
                const double m = stats::mean(sizes);
                const bool peak_ok = *std::max_element(s.peak.begin(), s.peak.end()) <= bound;
                ok = ok && m >= kTradeoffLo && m <= kTradeoffHi && peak_ok;
                detail << "CondMat " << to_string(alg) << " mean trade-offs " << fmt(m) << " (reference 136), peak "
                       << (peak_ok ? "<=" : ">") << " " << bound << "; ";
            }
        }
    } else {
        detail << missing(data, "ca-CondMat");
    }
    if (!ran_any) return skip(detail.str());
    if (!g) return ok ? skip(detail.str() + " [partial: trade-off count not checked]") : fail(detail.str());
    return check(ok, detail.str());
}

// ---------------------------------------------------------------- desk scale

std::shared_ptr<const Graph> sparse_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<NodeId, NodeId>> edges;
    while (edges.size() < m) {
        const auto u = static_cast<NodeId>(rng.uniform_index(n)), v = static_cast<NodeId>(rng.uniform_index(n));
        if (u != v) edges.emplace_back(u, v);
    }
    return std::make_shared<const Graph>(Graph::from_edges(n, edges));
}

struct TraceStats {
    std::size_t window_violations = 0;
    std::size_t occupancy_violations = 0;
    std::size_t records = 0;
    std::size_t in_window = 0;
    std::size_t accepted = 0;
    std::size_t accepted_near = 0;
    std::size_t max_occupancy = 0;
};

TraceStats check_trace(const Instance& inst, Regime regime, std::uint64_t t_max, std::uint64_t seed,
                       std::size_t max_occupancy) {
    RunConfig cfg;
    cfg.algorithm = Algorithm::sw_gsemo;
    cfg.t_max = t_max;
    cfg.seed = seed;
    cfg.regime = regime;
    cfg.trace = true;
    const auto r = run(inst, cfg);
    TraceStats s;
    for (const auto& rec : r.trace) {
        ++s.records;
        const double c = double(rec.t) / double(t_max) * inst.budget();
        s.max_occupancy = std::max(s.max_occupancy, rec.window_size);
        if (rec.window_size > max_occupancy) ++s.occupancy_violations;
        if (rec.in_window) {
            ++s.in_window;
            if (rec.parent_g2 < std::floor(c) || rec.parent_g2 > std::ceil(c)) ++s.window_violations;
        }
        if (rec.accepted && rec.g1 >= 0) {
            ++s.accepted;
            s.accepted_near += rec.g2 >= std::floor(c) - 1 && rec.g2 <= std::ceil(c) + 1;
        }
    }
    return s;
}

Verdict criterion6(Datasets& data) {
    struct Case {
        std::string label;
        Instance inst;
        Regime regime;
        std::size_t max_occ;
        std::uint64_t t_max;
    };
    std::vector<Case> cases;
    for (std::uint64_t s = 0; s < 3; ++s) {
        const auto g = sparse_graph(1882, 1740, 10 + s);
        cases.push_back({"synthetic-iid-" + std::to_string(s),
                         Instance(g, make_iid_weights(1882, 1, 0.5), 43, s == 1 ? 0.001 : 0.1,
                                  s == 2 ? SurrogateKind::chernoff : SurrogateKind::chebyshev),
                         Regime::surrogate_g2, 1, 300000});
        cases.push_back({"synthetic-degree-" + std::to_string(s),
                         Instance(g, make_degree_weights(*g, 1.0), 94, s == 1 ? 0.001 : 0.1,
                                  s == 2 ? SurrogateKind::chernoff : SurrogateKind::chebyshev),
                         Regime::expected_g2, 2, 300000});
    }
    if (const auto g = data.csphd()) {
        cases.push_back({"ca-CSphd-iid", Instance(g, make_iid_weights(g->node_count(), 1, 0.5), 43, 0.1,
                                                  SurrogateKind::chebyshev),
                         Regime::surrogate_g2, 1, 1500000});
        cases.push_back({"ca-CSphd-degree", Instance(g, make_degree_weights(*g, 1.0), 43, 0.1,
                                                     SurrogateKind::chebyshev),
                         Regime::expected_g2, 2, 1500000});
    }
    std::size_t viol = 0, records = 0, in_window = 0, accepted = 0, near = 0;
    std::ostringstream detail;
    for (const auto& c : cases) {
        const auto s = check_trace(c.inst, c.regime, c.t_max, 5, c.max_occ);
        viol += s.window_violations + s.occupancy_violations;
        records += s.records;
        in_window += s.in_window;
        accepted += s.accepted;
        near += s.accepted_near;
        detail << c.label << " max|P|=" << s.max_occupancy << " near="
               << fmt(100.0 * double(s.accepted_near) / double(std::max<std::size_t>(1, s.accepted))) << "%; ";
    }
    detail << records << " iterations, " << in_window << " in-window parents, " << viol << " violations";
    detail << "; accepted offspring near the window: " << fmt(100.0 * double(near) / double(std::max<std::size_t>(1, accepted)))
           << "% (informational)";
    return check(viol == 0 && in_window > 0, detail.str());
}

Verdict criterion7() {
    Rng rng(707);
    const auto g = sparse_graph(300, 600, 7);
    const std::vector<WeightModel> models{make_iid_weights(300, 1, 0.5), make_degree_weights(*g, 1.0)};
    struct Combo {
        SurrogateKind kind;
        double alpha;
    };
    const std::vector<Combo> combos{{SurrogateKind::chebyshev, 0.1},
                                    {SurrogateKind::chebyshev, 0.001},
                                    {SurrogateKind::chernoff, 0.1},
                                    {SurrogateKind::chernoff, 0.001}};
    std::size_t checks = 0, violations = 0;
    double worst_excess = -1.0;
    for (const auto& w : models) {
        for (std::size_t s = 0; s < kSoundnessSolutions; ++s) {
            BitVector x(300);
            const auto size = 1 + rng.uniform_index(40);
            while (x.count() < size) x.set(rng.uniform_index(300));
            std::vector<double> budgets;
            // tightest budget that still certifies x: B = surrogate(x)
            for (const auto& c : combos) budgets.push_back(surrogate_weight(x, w, c.alpha, c.kind));
            std::vector<int> exceed(combos.size());
            for (int i = 0; i < kSoundnessSamples; ++i) {
                const double total = w.sample_total(x, rng);
                for (std::size_t c = 0; c < combos.size(); ++c) exceed[c] += total > budgets[c];
            }
            for (std::size_t c = 0; c < combos.size(); ++c) {
                const double a = combos[c].alpha;
                const double p = double(exceed[c]) / kSoundnessSamples;
                const double limit = a + kSoundnessSigmas * std::sqrt(a * (1 - a) / kSoundnessSamples);
                ++checks;
                violations += p > limit;
                worst_excess = std::max(worst_excess, p - a);
            }
        }
    }
    return check(violations == 0, std::to_string(checks) + " (solution, surrogate, alpha) checks with B = W_surrogate(x), " +
                                      std::to_string(violations) + " violations, max Pr-alpha = " +
                                      std::to_string(worst_excess));
}

Verdict criterion8() {
    std::size_t filter_mismatch = 0;
    std::map<Algorithm, std::size_t> hits;
    std::ostringstream misses;
    for (std::uint64_t i = 0; i < kOracleInstances; ++i) {
        Rng rng(8000 + i);
        const std::size_t n = 8 + rng.uniform_index(8);
        const auto g = testutil::random_graph(n, 0.15 + 0.25 * rng.uniform01(), rng);
        const bool degree = i % 2 == 1;
        const auto kind = rng.bernoulli(0.5) ? SurrogateKind::chebyshev : SurrogateKind::chernoff;
        const double alpha = std::vector<double>{0.1, 0.01, 0.001}[rng.uniform_index(3)];
        auto w = degree ? make_degree_weights(*g, 1.0) : make_iid_weights(n, 1 + rng.uniform_index(2), 0.5);
        double total = 0;
        for (const auto a : w.expected()) total += double(a);
        const double budget = std::round(total * (0.25 + 0.4 * rng.uniform01()));
        const Instance inst(g, std::move(w), budget, alpha, kind);
        const auto regime = degree ? Regime::expected_g2 : Regime::surrogate_g2;

        // archive against brute-force filter on a random insert sequence
        ParetoArchive archive;
        std::vector<Objectives> seen;
        for (int step = 0; step < 300; ++step) {
            const auto x = testutil::from_mask(rng.next() & ((std::uint64_t{1} << n) - 1), n);
            Individual ind;
            ind.bits = x;
            ind.obj = evaluate(x, inst, regime);
            seen.push_back(ind.obj);
            archive.insert(ind);
            const auto expected = testutil::pareto_filter(seen);
            bool same = archive.size() == expected.size();
            for (std::size_t k = 0; same && k < expected.size(); ++k) same = archive[k].obj == expected[k];
            filter_mismatch += !same;
        }

        const auto opt = testutil::exhaustive_optimum(inst).best;
        for (const auto alg : {Algorithm::gsemo, Algorithm::sw_gsemo, Algorithm::nsga2}) {
            RunConfig cfg;
            cfg.algorithm = alg;
            cfg.t_max = kOracleTmax;
            cfg.seed = 1000 + i;
            cfg.regime = regime;
            const auto r = run(inst, cfg);
            if (r.best_g1 == opt) ++hits[alg];
            else misses << to_string(alg) << "@" << i << "(" << fmt(r.best_g1) << "/" << fmt(opt) << ") ";
        }
    }
    bool ok = filter_mismatch == 0;
    std::ostringstream d;
    d << "archive vs filter mismatches " << filter_mismatch << "; optimum hits";
    for (const auto alg : {Algorithm::gsemo, Algorithm::sw_gsemo, Algorithm::nsga2}) {
        ok = ok && hits[alg] >= kOracleRunsNeeded;
        d << " " << to_string(alg) << " " << hits[alg] << "/" << kOracleInstances;
    }
    if (!misses.str().empty()) d << "; misses: " << misses.str();
    return check(ok, d.str());
}

Verdict criterion9() {
    std::ifstream in(std::string(CCSUBMOD_TEST_DATA) + "/kruskal_fixtures.json");
    if (!in) return fail("fixture file missing");
    const auto fixtures = nlohmann::json::parse(in);
    double worst_h = 0, worst_p = 0;
    for (const auto& f : fixtures) {
        const auto r = stats::kruskal_wallis(f["groups"].get<std::vector<std::vector<double>>>());
        const double h = f["h"], p = f["p"];
        worst_h = std::max(worst_h, std::fabs(r.h - h) / std::max(1.0, std::fabs(h)));
        worst_p = std::max(worst_p, std::fabs(r.p - p));
    }
    const auto eq = stats::posthoc_marks({{3, 4, 5, 6}, {3, 4, 5, 6}, {3, 4, 5, 6}});
    bool all_equal = true;
    for (const auto& row : eq)
        for (const auto m : row) all_equal = all_equal && m == stats::Mark::equal;
    std::vector<double> lo, hi;
    for (int i = 0; i < 30; ++i) {
        lo.push_back(i);
        hi.push_back(1000 + i);
    }
    const auto sep = stats::posthoc_marks({lo, hi});
    const bool antisym = sep[0][1] == stats::Mark::worse && sep[1][0] == stats::Mark::better;
    const bool ok = fixtures.size() == 50 && worst_h <= kStatsTol && worst_p <= kStatsTol && all_equal && antisym;
    std::ostringstream d;
    d << fixtures.size() << " fixtures, max |dH| (rel) " << worst_h << ", max |dp| " << worst_p << "; identical groups "
      << (all_equal ? "all '='" : "NOT all '='") << "; separated groups " << (antisym ? "'-'/'+'" : "not antisymmetric");
    return check(ok, d.str());
}

std::shared_ptr<const Graph> write_stand_in(const fs::path& path, std::size_t n, std::size_t m, std::uint64_t seed) {
    auto g = sparse_graph(n, m, seed);
    std::ofstream out(path);
    write_matrix_market(*g, out);
    return g;
}

Verdict criterion10(Datasets& data) {
    const auto dir = fs::temp_directory_path() / "ccsubmod_acceptance_grid";
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::ostringstream d;
    bool ok = true;

    // the small grid, on ca-CSphd if present, else a stand-in with the same node count
    auto cfg = load_experiment_config(fs::path(CCSUBMOD_SOURCE_DIR) / "configs" / "small-grid.json");
    if (const auto p = data.locate({"ca-CSphd", "ca-csphd", "CSphd"})) {
        cfg.instances[0].graph = *p;
        d << "graph ca-CSphd; ";
    } else {
        cfg.instances[0].graph = dir / "ca-CSphd.mtx";
        write_stand_in(cfg.instances[0].graph, 1882, 1740, 42);
        d << "graph: 1882-node stand-in; ";
    }
    const auto rows = expand_rows(cfg);
    ok = ok && rows.size() * cfg.algorithms.size() == 48;
    cfg.t_max = {3000};
    cfg.repetitions = 3;
    cfg.output_dir = dir / "out";
    const auto results = run_experiment(cfg);
    write_outputs(cfg, results);
    std::ifstream csv(cfg.output_dir / "table.csv");
    std::string header, line;
    std::getline(csv, header);
    std::size_t data_rows = 0, filled = 0;
    const std::regex marks(R"re("?(\d\([+=\-]\),){2}\d\([+=\-]\)"?)re");
    std::size_t marks_ok = 0;
    while (std::getline(csv, line)) {
        ++data_rows;
        // split on commas outside quotes
        std::vector<std::string> fields;
        std::string cur;
        bool quoted = false;
        for (const char c : line) {
            if (c == '"') quoted = !quoted;
            if (c == ',' && !quoted) {
                fields.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        fields.push_back(cur);
        if (fields.size() != 6 + 3 * cfg.algorithms.size()) continue;
        for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
            filled += !fields[6 + 3 * a].empty();
            marks_ok += std::regex_match(fields[8 + 3 * a], marks);
        }
    }
    const std::string expected_header_start = "graph,weights,surrogate,B,t_max,alpha,GSEMO (1) mean";
    ok = ok && data_rows == 12 && filled == 48 && marks_ok == 48 && header.rfind(expected_header_start, 0) == 0 &&
         results.failures() == 0;
    d << "small grid: " << rows.size() << " rows x " << cfg.algorithms.size() << " algorithms, table.csv " << data_rows
      << " rows, " << filled << " filled algorithm-cells, " << marks_ok << " mark strings; ";

    // the large-graph grid: layout only, not run at the stated budget
    auto full = load_experiment_config(fs::path(CCSUBMOD_SOURCE_DIR) / "configs" / "full-grid.json");
    ExperimentConfig condmat = full;
    condmat.instances = {full.instances[2]};
    if (const auto p = data.locate({"ca-CondMat", "ca-CondaMat", "ca-condmat"})) condmat.instances[0].graph = *p;
    else {
        condmat.instances[0].graph = dir / "ca-CondMat.mtx";
        write_stand_in(condmat.instances[0].graph, 21363, 91286, 43);
    }
    const auto big_rows = expand_rows(condmat);
    std::set<double> budgets;
    for (const auto& r : big_rows) budgets.insert(r.budget);
    const bool big_ok = big_rows.size() == 36 && budgets == std::set<double>{146, 1068, 2136};
    ok = ok && big_ok;
    d << "large grid expands to " << big_rows.size() << " rows x " << condmat.algorithms.size()
      << " algorithms with B in {146,1068,2136}: " << (big_ok ? "yes" : "no") << " (full run excluded from gating)";
    return check(ok, d.str());
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> selected{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    fs::path data_dir = fs::path(CCSUBMOD_SOURCE_DIR) / "data";
    if (const char* env = std::getenv("CCSUBMOD_DATA_DIR"); env != nullptr && *env != '\0') data_dir = env;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criteria" && i + 1 < argc) {
            selected.clear();
            std::stringstream ss(argv[++i]);
            std::string tok;
            while (std::getline(ss, tok, ',')) selected.insert(std::stoi(tok));
        } else if (arg == "--data-dir" && i + 1 < argc) {
            data_dir = argv[++i];
        } else {
            std::cerr << "usage: acceptance [--criteria 1,2,...] [--data-dir DIR]\n";
            return 2;
        }
    }

    Datasets data{data_dir, {}};
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"small-graph IID Chebyshev reproduction", [&] { return criterion1(data); }},
        {"small-graph IID Chernoff reproduction", [&] { return criterion2(data); }},
        {"same-dispersion reproduction", [&] { return criterion3(data); }},
        {"mid-scale ordering SW-GSEMO > GSEMO", [&] { return criterion4(data); }},
        {"IID population-size bound and trade-off count", [&] { return criterion5(data); }},
        {"sliding-window invariants", [&] { return criterion6(data); }},
        {"surrogate soundness", [] { return criterion7(); }},
        {"oracle equivalence at desk scale", [] { return criterion8(); }},
        {"statistics calibration", [] { return criterion9(); }},
        {"large grid excluded; table layout on the small grid", [&] { return criterion10(data); }},
    };

    bool any_fail = false, any_skip = false;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i + 1);
        if (!selected.count(id)) continue;
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = fail(std::string("exception: ") + e.what());
        }
        const char* tag = v.status == Status::pass ? "PASS" : v.status == Status::fail ? "FAIL" : "SKIP";
        std::cout << "[" << tag << "] criterion " << id << " - " << criteria[i].first << ": " << v.detail << std::endl;
        any_fail = any_fail || v.status == Status::fail;
        any_skip = any_skip || v.status == Status::skip;
    }
    return any_fail ? 1 : any_skip ? 77 : 0;
}
