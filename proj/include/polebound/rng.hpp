#pragma once

#include <cstdint>
#include <random>

#include "polebound/complex.hpp"

namespace polebound {

/// Deterministic uniform generator. The [0,1) mapping is fixed here (53-bit
/// mantissa fill) rather than delegated to std::uniform_real_distribution,
/// whose output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Independent child seed for (seed, index); splitmix64 finalizer.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t x = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

/// Uniform over the closed disk |z| <= radius (polar; two draws per call).
inline Complex uniform_in_disk(Rng& rng, double radius) {
    const double r = radius * std::sqrt(rng.uniform01());
    const double phi = 2.0 * 3.14159265358979323846 * rng.uniform01();
    return {r * std::cos(phi), r * std::sin(phi)};
}

}  // namespace polebound
