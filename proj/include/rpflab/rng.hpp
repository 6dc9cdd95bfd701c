// Counter-based deterministic RNG.
//
// Every sampled quantity in the library is keyed by (seed, stream, counter)
// so that results are reproducible and independent of evaluation order.
#pragma once

#include <cstdint>

namespace rpflab {

// SplitMix64 finalizer, applied to a combined key.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t keyed_bits(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    std::uint64_t z = mix64(seed ^ 0x6a09e667f3bcc909ULL);
    z = mix64(z ^ mix64(stream ^ 0xbb67ae8584caa73bULL));
    return mix64(z ^ mix64(counter));
}

// Uniform double in [0,1), 53 mantissa bits.
inline double keyed_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return static_cast<double>(keyed_bits(seed, stream, counter) >> 11) * 0x1.0p-53;
}

// Uniform integer in {0, ..., n-1}; n must be small against 2^64 (no rejection).
inline std::uint64_t keyed_below(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter,
                                 std::uint64_t n) {
    return keyed_bits(seed, stream, counter) % n;
}

}  // namespace rpflab
