#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace ccsubmod {

/// SplitMix64 finalizer; used to decorrelate user seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed of repetition `rep` under experiment seed `base`:
/// splitmix64(base ^ splitmix64(rep)).
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t rep) noexcept {
    return splitmix64(base ^ splitmix64(rep));
}

/// MT19937-64 with distribution helpers whose output is fixed by this code
/// rather than by the standard library implementation.
class Rng {
public:
    using engine_type = std::mt19937_64;

    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t uniform_index(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x = 0;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, 1].
    double uniform01_open_low() { return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Standard normal via Box-Muller.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform01_open_low()));
        const double theta = 2.0 * std::numbers::pi * uniform01();
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

private:
    engine_type engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace ccsubmod
