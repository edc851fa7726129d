#pragma once

#include <cstdint>

#include "zonedet/types.hpp"

namespace zonedet {

/// SplitMix64: the k-th output for seed s is mix(s + k * 0x9E3779B97F4A7C15),
/// k = 1, 2, ... The sequence is fully determined by the seed, which keeps
/// generated matrices reproducible in any language.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) from the top 53 bits.
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
    /// Uniform in [0, bound). Plain modulo; bias is negligible for small bounds.
    Index below(Index bound) noexcept { return static_cast<Index>(next() % bound); }
    /// Real and imaginary parts uniform in [-1, 1).
    Complex complex_unit_box() noexcept {
        double re = uniform(-1.0, 1.0);
        double im = uniform(-1.0, 1.0);
        return {re, im};
    }

private:
    std::uint64_t state_;
};

}  // namespace zonedet
