#pragma once

#include <cstdint>

namespace fsd {

// SplitMix64 (Steele, Lea, Flood). Used for every generator in the project so
// that alternate-language ports can reproduce instances and benches
// byte-for-byte: same seed, same stream, bounded draws by plain modulo.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish integer in [lo, hi] (modulo reduction; the tiny bias does
    // not matter for test instances and keeps ports trivial).
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }
};

}  // namespace fsd
