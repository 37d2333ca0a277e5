#pragma once

#include <cstdint>

namespace circlepaint {

// SplitMix64 (the mixer used by Java's SplittableRandom). Written out here
// because generated test instances must be bit-identical across platforms,
// and standard-library engines/distributions are not portable.
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Draw in [0, n). Plain modulo: the bias is negligible for test-instance
    // generation and keeps the recurrence trivially reproducible.
    uint64_t below(uint64_t n) { return next() % n; }
};

}  // namespace circlepaint
