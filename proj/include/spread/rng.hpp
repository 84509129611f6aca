#pragma once

#include <cstdint>
#include <vector>

namespace spread {

// All randomness in the library flows through this generator so that runs are
// reproducible bit-for-bit across platforms and compilers. The algorithm is
// SplitMix64 (Steele, Lea, Flood 2014): state advances by the golden-ratio
// increment and the output is the mixed state. Period 2^64, 64-bit output.
//
// Streams: a (seed, stream) pair deterministically selects an independent
// sequence. The engine reserves stream 0 for graph generation, stream 1 for
// initial-state permutations and stream 2 for epoch Bernoulli trials.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(mix(seed + kGolden * (stream + 1))) {}

    /// Next raw 64-bit value (SplitMix64 step).
    std::uint64_t next() {
        state_ += kGolden;
        return mix(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// True with probability p. p <= 0 never fires, p >= 1 always fires.
    bool bernoulli(double p) { return unit() < p; }

    /// Uniform integer in [0, n). n must be positive. Unbiased (rejection).
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    /// In-place Fisher-Yates shuffle, consuming one below() per swap.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

    /// SplitMix64 output function. Also used standalone to derive sub-seeds.
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Deterministically derives a new seed from (seed, a, b); used by the
    /// benchmark to give every repetition its own stream.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
        return mix(mix(seed + kGolden * a) + kGolden * b);
    }

    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

private:
    std::uint64_t state_;
};

// Stream ids, kept in one place so seeds never collide across purposes.
inline constexpr std::uint64_t kStreamGraph = 0;
inline constexpr std::uint64_t kStreamInitial = 1;
inline constexpr std::uint64_t kStreamTrials = 2;

}  // namespace spread
