#pragma once

#include <cstdint>

namespace supel {

/// Deterministic 64-bit generator (splitmix64).  Used wherever randomized
/// checks must reproduce byte-identical output for a given seed, independent
/// of platform or standard-library version.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-enough value in [0, bound).  bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Value in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

}  // namespace supel
