#pragma once

#include <cstdint>

namespace wiretap {

/// Deterministic, platform-independent random stream used by the Monte Carlo
/// simulations. std:: distributions are implementation-defined, which would
/// break the byte-identical-output contract, so the few draws needed here are
/// built directly on splitmix64.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : state_(seed) {}

    /// Derive an independent stream for a named substream of a seed.
    static RandomStream derive(std::uint64_t seed, std::uint64_t stream_id) {
        RandomStream mix(seed ^ (0x9e3779b97f4a7c15ull * (stream_id + 1)));
        mix.next_u64();
        return mix;
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double next_double(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Fair +/-1 symbol.
    int next_symbol() { return (next_u64() & 1u) ? 1 : -1; }

    /// Bernoulli(p).
    bool next_bernoulli(double p) { return next_double() < p; }

    /// Uniform index in [0, n).
    std::uint64_t next_index(std::uint64_t n) { return next_u64() % n; }

private:
    std::uint64_t state_;
};

}  // namespace wiretap
