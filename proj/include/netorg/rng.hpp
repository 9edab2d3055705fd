#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace netorg {

// All stochastic code draws through these helpers rather than
// std::*_distribution, whose output differs between standard library
// implementations; experiment outputs must be reproducible from a seed.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

// Unbiased draw from [0, n).
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_below: n must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

inline int uniform_index(Rng& rng, int n) {
    if (n <= 0) throw std::invalid_argument("uniform_index: n must be positive");
    return static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace netorg
