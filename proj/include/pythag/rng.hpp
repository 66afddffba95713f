#pragma once

#include <cstdint>
#include <random>

namespace pythag::rng {

// SplitMix64 finalizer; decorrelates (seed, stream) pairs before seeding.
inline std::uint64_t mix(std::uint64_t seed, std::uint64_t stream_id) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream_id + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Independent engine per (seed, stream). mt19937_64 output is pinned by the
// standard, so sequences are reproducible across platforms.
inline std::mt19937_64 stream(std::uint64_t seed, std::uint64_t stream_id) {
    return std::mt19937_64{mix(seed, stream_id)};
}

// Uniform doubles from the top 53 bits. std::uniform_real_distribution is
// implementation-defined; this mapping is not.
inline double uniform01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& g, double lo, double hi) {
    return lo + (hi - lo) * uniform01(g);
}

// Inclusive bounds, rejection sampling (no modulo bias).
inline int uniform_int(std::mt19937_64& g, int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
    std::uint64_t x;
    do {
        x = g();
    } while (x >= limit);
    return lo + static_cast<int>(x % span);
}

}  // namespace pythag::rng
