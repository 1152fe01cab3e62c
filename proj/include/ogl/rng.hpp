#pragma once

#include <cstdint>

namespace ogl {

// Counter-based pseudo-random streams.
//
// The whole project draws randomness from one primitive: the splitmix64
// finalizer applied to a Weyl sequence,
//
//     value(key, i) = mix64(key + i * GOLDEN),   i = 1, 2, ...
//
// A stream is just (key, counter), so any contiguous block of outputs can be
// produced from (key, start_index) alone. That makes layer generation
// order-independent and lets the batch kernel (kernels::mix64_fill) produce
// bit-identical output to repeated next_u64() calls.
//
// Stream keys are derived, never shared:
//     child_seed(seed, a)    = mix64(mix64(seed ^ CHILD_TAG) + mix64(a))
//     child_seed(seed, a, b) = child_seed(child_seed(seed, a), b)
// Layer k of a graph with seed s draws from key child_seed(s, k); experiment
// replicate (n, rep) of base seed s uses child_seed(s, n, rep). These
// formulas are fixed: results are reproducible across machines, thread
// counts, and evaluation orders.

inline constexpr std::uint64_t RNG_GOLDEN = 0x9E3779B97F4A7C15ULL;
inline constexpr std::uint64_t RNG_CHILD_TAG = 0x6A09E667F3BCC909ULL;

// splitmix64 finalizer (a 64-bit bijection).
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t child_seed(std::uint64_t seed, std::uint64_t a) {
    return mix64(mix64(seed ^ RNG_CHILD_TAG) + mix64(a));
}

inline std::uint64_t child_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return child_seed(child_seed(seed, a), b);
}

class RandomStream {
public:
    explicit RandomStream(std::uint64_t key) : key_(key) {}

    std::uint64_t key() const { return key_; }
    std::uint64_t counter() const { return ctr_; }

    // Skip k outputs (used after a batch fill consumed them).
    void advance(std::uint64_t k) { ctr_ += k; }

    std::uint64_t next_u64() { return mix64(key_ + (++ctr_) * RNG_GOLDEN); }

    // Uniform on [0,1) with 53 random bits. next_double() < y is the
    // project-wide Bernoulli(y) draw; it is exact at y = 0 and y = 1.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on [0, bound), exactly (Lemire's rejection method). bound >= 1.
    std::uint32_t next_bounded(std::uint32_t bound) {
        std::uint64_t x = next_u64();
        __uint128_t m = static_cast<__uint128_t>(x) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            std::uint64_t t = (0 - static_cast<std::uint64_t>(bound)) % bound;
            while (lo < t) {
                x = next_u64();
                m = static_cast<__uint128_t>(x) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint32_t>(m >> 64);
    }

    static double to_unit_double(std::uint64_t u) {
        return static_cast<double>(u >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t key_;
    std::uint64_t ctr_ = 0;
};

}  // namespace ogl
