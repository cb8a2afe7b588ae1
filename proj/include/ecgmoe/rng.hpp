#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace ecgmoe {

// Deterministic random source. mt19937_64 output is pinned by the standard;
// the distribution mappings below are written out explicitly so that streams
// are bit-identical across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t bits() { return engine_(); }

    // Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller. Two uniforms per draw, no cached spare,
    // so the stream position is a pure function of the call count.
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        // u1 == 0 would take log of zero
        while (u1 <= 0.0) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // Uniform integer in [lo, hi] via rejection-free 64-bit modulo; bias is
    // negligible for the small ranges used here but we reject to stay exact.
    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t r = engine_();
        while (r >= limit) r = engine_();
        return lo + static_cast<std::int64_t>(r % span);
    }

private:
    std::mt19937_64 engine_;
};

// splitmix64 step, used to derive independent per-record / per-module seeds
// from one master seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace ecgmoe
