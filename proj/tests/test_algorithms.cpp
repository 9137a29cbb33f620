#include <doctest.h>

#include <cmath>

#include "ccsubmod/algorithms.hpp"
#include "ccsubmod/run_result.hpp"
#include "test_util.hpp"

using namespace ccsubmod;

namespace {

RunConfig config(Algorithm a, std::uint64_t t_max, std::uint64_t seed, Regime r = Regime::surrogate_g2) {
    RunConfig c;
    c.algorithm = a;
    c.t_max = t_max;
    c.seed = seed;
    c.regime = r;
    return c;
}

Individual member(double g1, double g2) {
    Individual i;
    i.bits = BitVector(4);
    i.obj = {g1, g2};
    return i;
}

Instance toy(std::uint64_t seed, std::size_t n, bool degree) {
    Rng rng(seed);
    const auto g = testutil::random_graph(n, 0.25, rng);
    if (degree) return Instance(g, make_degree_weights(*g, 1.0), 9.0, 0.1, SurrogateKind::chernoff);
    return Instance(g, make_iid_weights(n, 1, 0.5), 5.0, 0.1, SurrogateKind::chebyshev);
}

}  // namespace

TEST_CASE("mutation") {
    Rng rng(1);
    BitVector one(1);
    for (int i = 0; i < 100; ++i) {
        const auto y = standard_bit_mutation(one, rng);
        CHECK(y.test(0) != one.test(0));
        one = y;
    }

    const std::size_t n = 1000;
    const BitVector x(n);
    double total = 0;
    const int trials = 100000;
    for (int i = 0; i < trials; ++i) total += double(standard_bit_mutation(x, rng).count());
    CHECK(std::fabs(total / trials - 1.0) < 0.05);

    Rng a(42), b(42);
    for (int i = 0; i < 50; ++i) CHECK(standard_bit_mutation(x, a) == standard_bit_mutation(x, b));
}

TEST_CASE("mutation flips each position with probability 1/n") {
    Rng rng(4);
    const std::size_t n = 20;
    std::vector<int> flips(n);
    const int trials = 200000;
    for (int t = 0; t < trials; ++t) {
        const auto y = standard_bit_mutation(BitVector(n), rng);
        for (const auto i : y.indices()) ++flips[i];
    }
    for (const auto f : flips) CHECK(std::fabs(double(f) / trials - 0.05) < 0.004);
}

TEST_CASE("sliding selection") {
    Rng rng(3);
    ParetoArchive a;
    a.insert(member(0, 0));
    a.insert(member(7, 2.3));

    const auto at0 = sliding_selection(a, 0, 100, 10, rng);
    CHECK(at0.index == 0);
    CHECK(at0.in_window);

    // c = 5.4 -> window [5, 6] empty; best of g2 <= 5 is the g1 = 7 member
    const auto mid = sliding_selection(a, 54, 100, 10, rng);
    CHECK_FALSE(mid.in_window);
    CHECK(mid.index == 1);

    a.insert(member(9, 10));
    const auto end = sliding_selection(a, 100, 100, 10, rng);
    CHECK(end.in_window);
    CHECK(end.window_size == 1);
    CHECK(a[end.index].obj.g2 == 10);

    // after t_max: uniform over everything
    std::vector<int> hits(3);
    for (int i = 0; i < 3000; ++i) ++hits[sliding_selection(a, 101, 100, 10, rng).index];
    for (const auto h : hits) CHECK(h > 850);

    // window [2, 3] holds only g2 = 2.3
    const auto w = sliding_selection(a, 25, 100, 10, rng);
    CHECK(w.in_window);
    CHECK(a[w.index].obj.g2 == 2.3);
}

TEST_CASE("sliding selection with no member below the window falls back to uniform") {
    Rng rng(9);
    ParetoArchive a;
    a.insert(member(4, 6));
    a.insert(member(8, 9));
    std::vector<int> hits(2);
    for (int i = 0; i < 2000; ++i) {
        const auto c = sliding_selection(a, 20, 100, 10, rng);  // c = 2
        CHECK_FALSE(c.in_window);
        ++hits[c.index];
    }
    CHECK(hits[0] > 850);
    CHECK(hits[1] > 850);
}

TEST_CASE("t_max = 0 keeps only the empty selection") {
    const auto inst = toy(1, 10, false);
    for (const auto alg : {Algorithm::gsemo, Algorithm::sw_gsemo, Algorithm::nsga2}) {
        const auto r = run(inst, config(alg, 0, 5));
        CHECK(r.best_g1 == 0.0);
        CHECK(r.best_bits.none());
        CHECK(r.evaluations == 1);
        if (alg != Algorithm::nsga2) CHECK(r.archive_size == 1);
    }
}

TEST_CASE("budget accounting and determinism") {
    const auto inst = toy(2, 14, false);
    for (const auto alg : {Algorithm::gsemo, Algorithm::sw_gsemo, Algorithm::nsga2})
        for (const std::uint64_t t : {1ULL, 7ULL, 1000ULL, 1003ULL}) {
            const auto r1 = run(inst, config(alg, t, 77));
            const auto r2 = run(inst, config(alg, t, 77));
            CHECK(r1.evaluations == t + 1);
            CHECK(to_json(r1, false) == to_json(r2, false));
        }
}

TEST_CASE("all algorithms reach the exhaustive optimum on toy instances") {
    for (std::uint64_t s = 0; s < 6; ++s) {
        const auto inst = toy(100 + s, 12, s % 2 == 1);
        const auto opt = testutil::exhaustive_optimum(inst);
        for (const auto alg : {Algorithm::gsemo, Algorithm::sw_gsemo, Algorithm::nsga2}) {
            const auto regime = s % 2 == 1 ? Regime::expected_g2 : Regime::surrogate_g2;
            const auto r = run(inst, config(alg, 10000, s, regime));
            CHECK(r.best_g1 == opt.best);
            CHECK(double(coverage_count(inst.graph(), r.best_bits)) == r.best_g1);
            CHECK(surrogate_weight(r.best_bits, inst.weights(), inst.alpha(), inst.surrogate()) <= inst.budget());
        }
    }
}

TEST_CASE("IID archive never exceeds the population bound") {
    for (std::uint64_t s = 0; s < 5; ++s) {
        Rng rng(s);
        const auto g = testutil::random_graph(60, 0.05, rng);
        const Instance inst(g, make_iid_weights(60, 1, 0.5), 12, 0.1, SurrogateKind::chebyshev);
        for (const auto alg : {Algorithm::gsemo, Algorithm::sw_gsemo}) {
            const auto r = run(inst, config(alg, 20000, s));
            CHECK(r.peak_archive_size <= iid_population_bound(60, 12, 1));
            CHECK(r.archive_size == r.front.size());
        }
    }
    CHECK(iid_population_bound(21363, 146, 1) == 147);
    CHECK(iid_population_bound(5, 146, 1) == 6);
}

TEST_CASE("sliding window trace invariants") {
    Rng rng(17);
    const auto g = testutil::random_graph(80, 0.05, rng);
    const Instance iid(g, make_iid_weights(80, 1, 0.5), 20, 0.1, SurrogateKind::chebyshev);
    const Instance deg(g, make_degree_weights(*g, 1.0), 40, 0.1, SurrogateKind::chernoff);
    struct Case {
        const Instance* inst;
        Regime regime;
        std::size_t max_window;
    };
    for (const auto& c : {Case{&iid, Regime::surrogate_g2, 1}, Case{&deg, Regime::expected_g2, 2}}) {
        auto cfg = config(Algorithm::sw_gsemo, 20000, 3, c.regime);
        cfg.trace = true;
        const auto r = run(*c.inst, cfg);
        REQUIRE(r.trace.size() == 20000);
        for (const auto& rec : r.trace) {
            const double chat = double(rec.t) / 20000.0 * c.inst->budget();
            CHECK(rec.window_size <= c.max_window);
            if (rec.in_window) {
                CHECK(rec.parent_g2 >= std::floor(chat));
                CHECK(rec.parent_g2 <= std::ceil(chat));
            }
        }
    }
}

TEST_CASE("fast non-dominated sort on hand-made points") {
    const std::vector<Objectives> pts{{5, 3}, {4, 4}, {6, 5}, {3, 1}, {4, 4}, {-1, 2}};
    const auto fronts = fast_non_dominated_sort(pts);
    // brute-force layering
    std::vector<std::size_t> remaining{0, 1, 2, 3, 4, 5};
    std::vector<std::vector<std::size_t>> expected;
    while (!remaining.empty()) {
        std::vector<std::size_t> layer, rest;
        for (const auto i : remaining) {
            bool dom = false;
            for (const auto j : remaining) dom = dom || strictly_dominates(pts[j], pts[i]);
            (dom ? rest : layer).push_back(i);
        }
        expected.push_back(layer);
        remaining = rest;
    }
    CHECK(fronts == expected);
    CHECK(fronts[0] == std::vector<std::size_t>{0, 2, 3});

    const auto cd = crowding_distance(pts, fronts[0]);
    CHECK(std::isinf(cd[1]));
    CHECK(std::isinf(cd[2]));
    // middle point (5,3): (6-3)/(6-3) + (5-1)/(5-1)
    CHECK(cd[0] == doctest::Approx(2.0));
}

TEST_CASE("one NSGA-II generation evaluates exactly lambda children") {
    const auto inst = toy(3, 10, false);
    auto cfg = config(Algorithm::nsga2, 10, 1);
    cfg.nsga2.population = 20;
    cfg.nsga2.children = 10;
    const auto r = run(inst, cfg);
    CHECK(r.evaluations == 11);
    cfg.nsga2.children = 0;
    CHECK_THROWS(run(inst, cfg));
}

TEST_CASE("run result json round trip") {
    const auto inst = toy(4, 12, false);
    const auto r = run(inst, config(Algorithm::sw_gsemo, 500, 3));
    const auto j = to_json(r, false);
    const auto back = run_result_from_json(j, 12);
    CHECK(to_json(back, false) == j);
    CHECK(back.best_bits == r.best_bits);
    CHECK(run_config_from_json(to_json(r.config)) == r.config);
}

TEST_CASE("time budget helpers") {
    CHECK(iid_time_budget(10, 5, 1) == doctest::Approx(std::exp(1.0) * 6 * 10 * std::log(60.0)));
    CHECK(same_dispersion_time_budget(10, 5, 1) == doctest::Approx(2 * std::exp(1.0) * 10 * 5 * std::log(50.0)));
}

TEST_CASE("accepted offspring follow the sliding window under IID weights") {
    Rng rng(10);
    std::vector<std::pair<NodeId, NodeId>> edges;
    while (edges.size() < 1740) {
        const auto u = NodeId(rng.uniform_index(1882)), v = NodeId(rng.uniform_index(1882));
        if (u != v) edges.emplace_back(u, v);
    }
    const auto g = std::make_shared<const Graph>(Graph::from_edges(1882, edges));
    const Instance inst(g, make_iid_weights(1882, 1, 0.5), 43, 0.1, SurrogateKind::chebyshev);
    auto cfg = config(Algorithm::sw_gsemo, 300000, 5);
    cfg.trace = true;
    const auto r = run(inst, cfg);
    std::size_t accepted = 0, near = 0;
    for (const auto& rec : r.trace) {
        if (!rec.accepted || rec.g1 < 0) continue;
        const double c = double(rec.t) / 300000.0 * 43.0;
        ++accepted;
        near += rec.g2 >= std::floor(c) - 1 && rec.g2 <= std::ceil(c) + 1;
    }
    REQUIRE(accepted > 0);
    CHECK(double(near) / double(accepted) >= 0.95);
}
