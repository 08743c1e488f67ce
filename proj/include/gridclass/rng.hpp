#pragma once

// Seedable, splittable random streams: xoshiro256++ cores seeded through
// SplitMix64.  Substream(seed, trial) is a pure function of its arguments,
// so Monte Carlo trials can be distributed across workers in any order and
// still reproduce bit-identical results for a fixed seed.

#include <array>
#include <cstdint>
#include <vector>

#include "gridclass/bigint.hpp"

namespace gridclass {

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& w : state_) w = sm.next();
        if (state_[0] == 0 && state_[1] == 0 && state_[2] == 0 && state_[3] == 0) state_[0] = 1;
    }

    // Independent stream for one trial of a run with the given master seed.
    static Rng substream(std::uint64_t seed, std::uint64_t trial_index) {
        SplitMix64 sm(seed);
        std::uint64_t base = sm.next();
        return Rng(base ^ (0xA0761D6478BD642FULL * (trial_index + 1)));
    }

    std::uint64_t next_u64() {
        auto rotl = [](std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); };
        std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    double uniform01() { return (next_u64() >> 11) * 0x1.0p-53; }

    // Uniform BigInt in [0, bound), exact.
    BigInt below_big(const BigInt& bound) {
        if (bound <= 0) return 0;
        std::size_t bits = msb(bound) + 1;
        std::size_t words = (bits + 63) / 64;
        for (;;) {
            BigInt r = 0;
            for (std::size_t w = 0; w < words; ++w) {
                r <<= 64;
                r |= BigInt(next_u64());
            }
            r >>= (words * 64 - bits);
            if (r < bound) return r;
        }
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::array<std::uint64_t, 4> state_{};
};

}  // namespace gridclass
