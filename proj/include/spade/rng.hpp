#pragma once

#include <cstdint>
#include <random>

namespace spade {

using RandomEngine = std::mt19937_64;

/// Derive the sub-stream seed for one ensemble member. SplitMix64 finalizer
/// over (seed, index); the same (seed, index) pair always yields the same
/// sub-seed, independent of evaluation order or worker count.
inline std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline RandomEngine make_engine(std::uint64_t seed, std::uint64_t index) {
    return RandomEngine(sub_seed(seed, index));
}

}  // namespace spade
