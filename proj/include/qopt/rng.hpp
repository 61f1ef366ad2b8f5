#pragma once

#include <cstdint>
#include <random>

namespace qopt {

// All randomized components derive their streams from explicit 64-bit seeds
// so that every run is reproducible. mt19937_64 output is fully specified by
// the standard; the helpers below avoid the implementation-defined
// std::*_distribution classes.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic sub-stream seed, e.g. mix_seed(seed, shot_index).
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(a) ^ (0x9e3779b97f4a7c15ULL + b));
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return mix_seed(mix_seed(a, b), c);
}

// Uniform in [0, 1) with 53-bit resolution.
inline double canonical_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased uniform integer in [lo, hi] via rejection sampling.
inline std::uint64_t uniform_int(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t range = hi - lo + 1;
    if (range == 0) return rng();  // full 64-bit range
    std::uint64_t reject_below = (0 - range) % range;  // 2^64 mod range
    for (;;) {
        std::uint64_t x = rng();
        if (x >= reject_below) return lo + x % range;
    }
}

}  // namespace qopt
