#pragma once

#include <cmath>
#include <cstdint>

namespace floq {

// splitmix64 finalizer (Steele, Lea, Flood 2014). Used for seeding and for the
// master-seed -> child-seed stream splitter.
inline uint64_t splitmix64_next(uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Child seed for a parallel stream. Injective in stream_index for a fixed
// master seed (odd multiplier, then a bijective finalizer), identical on every
// platform: child = mix(master + (index+1) * 0x9E3779B97F4A7C15).
inline uint64_t seed_stream(uint64_t master_seed, uint64_t stream_index) {
    uint64_t s = master_seed + (stream_index + 1) * 0x9E3779B97F4A7C15ULL;
    return splitmix64_next(s);
}

// xoshiro256++ (Blackman & Vigna), seeded through splitmix64. All derived
// draws (uniform, bounded int, gaussian) are implemented here rather than via
// std::*_distribution so that streams are bit-identical across platforms.
class Rng {
  public:
    explicit Rng(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64_next(sm);
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on [0,1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Unbiased uniform integer in [0, n) by rejection.
    uint64_t below(uint64_t n) {
        const uint64_t threshold = (0 - n) % n;
        for (;;) {
            const uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    bool coin() { return (next_u64() >> 63) != 0; }

    // Standard normal via the polar method; second value cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        have_spare_ = true;
        return u * m;
    }

  private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t state_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace floq
