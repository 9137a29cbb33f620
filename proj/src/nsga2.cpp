#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "ccsubmod/algorithms.hpp"

namespace ccsubmod {

std::vector<std::vector<std::size_t>> fast_non_dominated_sort(std::span<const Objectives> points) {
    const std::size_t m = points.size();
    std::vector<std::vector<std::size_t>> dominated_by_me(m);
    std::vector<std::size_t> domination_count(m, 0);
    std::vector<std::vector<std::size_t>> fronts;
    std::vector<std::size_t> current;

    for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t q = p + 1; q < m; ++q) {
            if (strictly_dominates(points[p], points[q])) {
                dominated_by_me[p].push_back(q);
                ++domination_count[q];
            } else if (strictly_dominates(points[q], points[p])) {
                dominated_by_me[q].push_back(p);
                ++domination_count[p];
            }
        }
    }
    for (std::size_t p = 0; p < m; ++p)
        if (domination_count[p] == 0) current.push_back(p);

    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (const auto p : current)
            for (const auto q : dominated_by_me[p])
                if (--domination_count[q] == 0) next.push_back(q);
        std::sort(next.begin(), next.end());
        fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return fronts;
}

std::vector<double> crowding_distance(std::span<const Objectives> points, std::span<const std::size_t> front) {
    const std::size_t k = front.size();
    std::vector<double> distance(k, 0.0);
    if (k <= 2) {
        std::fill(distance.begin(), distance.end(), std::numeric_limits<double>::infinity());
        return distance;
    }
    std::vector<std::size_t> order(k);
    for (const auto objective : {0, 1}) {
        const auto value = [&](std::size_t i) { return objective == 0 ? points[front[i]].g1 : points[front[i]].g2; };
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return value(a) < value(b); });
        const double lo = value(order.front());
        const double hi = value(order.back());
        distance[order.front()] = std::numeric_limits<double>::infinity();
        distance[order.back()] = std::numeric_limits<double>::infinity();
        if (!(hi > lo)) continue;
        for (std::size_t r = 1; r + 1 < k; ++r)
            distance[order[r]] += (value(order[r + 1]) - value(order[r - 1])) / (hi - lo);
    }
    return distance;
}

namespace {

struct Ranked {
    Individual ind;
    std::size_t rank = 0;
    double crowding = 0.0;
};

/// Keeps `mu` members of `pool` by front rank, then crowding distance.
std::vector<Ranked> select_survivors(std::vector<Individual> pool, std::size_t mu) {
    std::vector<Objectives> objs;
    objs.reserve(pool.size());
    for (const auto& p : pool) objs.push_back(p.obj);
    const auto fronts = fast_non_dominated_sort(objs);

    std::vector<Ranked> survivors;
    survivors.reserve(mu);
    for (std::size_t r = 0; r < fronts.size() && survivors.size() < mu; ++r) {
        const auto& front = fronts[r];
        const auto dist = crowding_distance(objs, front);
        std::vector<std::size_t> order(front.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        if (survivors.size() + front.size() > mu)
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dist[a] > dist[b]; });
        for (const auto i : order) {
            if (survivors.size() == mu) break;
            survivors.push_back({std::move(pool[front[i]]), r, dist[i]});
        }
    }
    return survivors;
}

std::size_t tournament(const std::vector<Ranked>& pop, Rng& rng) {
    const auto a = rng.uniform_index(pop.size());
    const auto b = rng.uniform_index(pop.size());
    if (pop[a].rank != pop[b].rank) return pop[a].rank < pop[b].rank ? a : b;
    if (pop[a].crowding != pop[b].crowding) return pop[a].crowding > pop[b].crowding ? a : b;
    return a;
}

BitVector uniform_crossover(const BitVector& x, const BitVector& y, Rng& rng) {
    BitVector child(x.size());
    for (std::size_t w = 0; w < x.words().size(); ++w) {
        const auto mask = rng.next();
        child.set_word(w, (x.words()[w] & mask) | (y.words()[w] & ~mask));
    }
    return child;
}

}  // namespace

RunResult run_nsga2(const Instance& instance, const RunConfig& cfg) {
    if (cfg.algorithm != Algorithm::nsga2) throw std::invalid_argument("run_nsga2 requires algorithm = nsga2");
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    const std::size_t mu = cfg.nsga2.population;
    const std::size_t lambda = cfg.nsga2.children;
    Rng rng(cfg.seed);

    RunResult result;
    result.config = cfg;

    Individual empty;
    empty.bits = BitVector(instance.size());
    empty.obj = evaluate(empty.bits, instance, cfg.regime);
    result.evaluations = 1;
    std::vector<Ranked> population;
    {
        std::vector<Individual> pool(mu, empty);
        population = select_survivors(std::move(pool), mu);
    }

    std::uint64_t remaining = cfg.t_max;
    std::uint64_t generation = 0;
    while (remaining > 0) {
        ++generation;
        const auto batch = static_cast<std::size_t>(std::min<std::uint64_t>(lambda, remaining));
        std::vector<Individual> pool;
        pool.reserve(mu + batch);
        for (std::size_t c = 0; c < batch; ++c) {
            const auto& p1 = population[tournament(population, rng)].ind;
            const auto& p2 = population[tournament(population, rng)].ind;
            Individual child;
            child.bits = rng.bernoulli(cfg.nsga2.crossover_probability) ? uniform_crossover(p1.bits, p2.bits, rng)
                                                                        : p1.bits;
            mutate_in_place(child.bits, rng);
            child.obj = evaluate(child.bits, instance, cfg.regime);
            child.born_at = generation;
            pool.push_back(std::move(child));
        }
        result.evaluations += batch;
        remaining -= batch;
        for (auto& r : population) pool.push_back(std::move(r.ind));
        population = select_survivors(std::move(pool), mu);
    }

    const Individual* best = nullptr;
    for (const auto& r : population) {
        const auto& o = r.ind.obj;
        if (!o.feasible()) continue;
        if (best == nullptr || o.g1 > best->obj.g1 || (o.g1 == best->obj.g1 && o.g2 < best->obj.g2)) best = &r.ind;
    }
    if (best != nullptr) {
        result.best_g1 = best->obj.g1;
        result.best_g2 = best->obj.g2;
        result.best_bits = best->bits;
    } else {
        result.best_bits = BitVector(instance.size());
    }

    for (const auto& r : population)
        if (r.rank == 0) result.front.push_back(r.ind.obj);
    std::sort(result.front.begin(), result.front.end(),
              [](const Objectives& a, const Objectives& b) { return a.g2 < b.g2 || (a.g2 == b.g2 && a.g1 < b.g1); });
    result.front.erase(std::unique(result.front.begin(), result.front.end()), result.front.end());
    result.archive_size = result.front.size();
    result.peak_archive_size = mu;
    result.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace ccsubmod
