#pragma once

#include <cstdint>
#include <random>

namespace gsdo {

/// Every random decision of a run draws from one engine owned by the run.
using Rng = std::mt19937_64;

/// Uniform in [0, 1). Spelled out instead of std::uniform_real_distribution so
/// streams are identical across standard library implementations.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, n) by rejection.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
    const std::uint64_t limit = Rng::max() - Rng::max() % n;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % n;
}

}  // namespace gsdo
