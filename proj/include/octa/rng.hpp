#pragma once

#include <cstdint>

namespace octa {

// Counter-based splittable generator. Every draw is a hash of
// (seed, counter), so a stream never depends on how much its siblings
// consumed, and child(tag) derives an independent reproducible stream.
// All runs in this project flow from one documented 64-bit seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed) {}

    // Independent stream addressed by a tag; stable across platforms.
    Rng child(std::uint64_t tag) const { return Rng(mix(seed_ ^ mix(tag + 0x9e3779b97f4a7c15ULL))); }

    std::uint64_t next_u64() { return mix(seed_ + (++counter_) * 0x9e3779b97f4a7c15ULL); }

    // Uniform in [0, bound) without modulo bias.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        for (;;) {
            std::uint64_t v = next_u64();
            if (v < limit) return v % bound;
        }
    }

    // Uniform in [lo, hi], inclusive.
    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool coin() { return (next_u64() & 1) != 0; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

// Default seed used by the CLI and the verification suites.
inline constexpr std::uint64_t kDefaultSeed = 42;

}  // namespace octa
