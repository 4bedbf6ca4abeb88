#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "coneproj/linalg.hpp"

namespace coneproj {

/// Deterministic 64-bit generator (splitmix64). Used instead of <random>
/// distributions so sample streams are bit-identical across standard
/// library implementations.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller (one value per pair of uniforms).
    double next_gaussian() {
        const double a = 1.0 - next_unit();  // (0, 1]
        const double b = next_unit();
        return std::sqrt(-2.0 * std::log(a)) * std::cos(2.0 * std::numbers::pi * b);
    }

  private:
    std::uint64_t state_;
};

/// Decorrelates a per-item stream from (seed, index), so that item i can be
/// generated independently of all others.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
    g.next_u64();
    return g.next_u64();
}

inline Vec gaussian_vector(std::size_t dim, SplitMix64& g) {
    Vec v(dim);
    for (double& x : v) x = g.next_gaussian();
    return v;
}

inline Vec random_unit_vector(std::size_t dim, SplitMix64& g) {
    for (;;) {
        Vec v = gaussian_vector(dim, g);
        const double n = norm(v);
        if (n > 1e-8) return scaled(v, 1.0 / n);
    }
}

}  // namespace coneproj
