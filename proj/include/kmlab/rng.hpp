#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace kmlab {

// Deterministic, platform-independent random source. std::uniform_int_distribution
// is implementation-defined, so bounded draws are done with Lemire's method on top
// of xoshiro256**; identical seeds reproduce identical streams bit-for-bit anywhere.

/// Identifier recorded in experiment metadata next to every seed.
inline constexpr std::string_view kRngId = "xoshiro256** (splitmix64-seeded, lemire-bounded) v1";

struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

class Xoshiro256 {
public:
    explicit Xoshiro256(uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& w : s_) w = sm.next();
    }

    uint64_t next() {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform integer in [0, bound). bound must be nonzero.
    uint64_t below(uint64_t bound) {
        // Lemire: multiply-shift with rejection on the biased fringe.
        uint64_t x = next();
        __uint128_t m = static_cast<__uint128_t>(x) * bound;
        auto lo = static_cast<uint64_t>(m);
        if (lo < bound) {
            const uint64_t threshold = (0 - bound) % bound;
            while (lo < threshold) {
                x = next();
                m = static_cast<__uint128_t>(x) * bound;
                lo = static_cast<uint64_t>(m);
            }
        }
        return static_cast<uint64_t>(m >> 64);
    }

    /// Uniform double in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t s_[4];
};

/// Independent stream for worker/trial `index` derived from a base seed.
/// Streams are stable across thread counts, so parallel runs stay reproducible.
inline Xoshiro256 derive_stream(uint64_t base_seed, uint64_t index) {
    SplitMix64 sm(base_seed ^ (0x9E3779B97F4A7C15ull * (index + 1)));
    return Xoshiro256(sm.next());
}

/// In-place Fisher-Yates shuffle.
template <typename T>
void shuffle(std::vector<T>& v, Xoshiro256& rng) {
    for (size_t i = v.size(); i > 1; --i) {
        const size_t j = rng.below(i);
        std::swap(v[i - 1], v[j]);
    }
}

/// Uniformly random m-subset of {0,...,n-1}, returned sorted ascending.
/// Floyd's algorithm: O(m) draws regardless of n.
std::vector<uint32_t> sample_index_subset(uint64_t n, uint64_t m, Xoshiro256& rng);

} // namespace kmlab
