#pragma once

#include <array>
#include <cstdint>

namespace fpplab {

// All randomness in the project flows through the two generators below; the
// standard library distributions are implementation-defined, so outputs would
// not be reproducible across toolchains.

// SplitMix64 avalanche step. Also used as the documented seed-mixing function.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline uint64_t mix64(uint64_t x) {
    uint64_t s = x;
    return splitmix64(s);
}

// Stateless hash of a small tuple, used for per-edge weights and open/closed
// labels: a pure function of (seed, a, b, lane).
inline uint64_t hash_tuple(uint64_t seed, uint64_t a, uint64_t b, uint64_t lane = 0) {
    uint64_t h = seed;
    h = mix64(h ^ (a + 0x9E3779B97F4A7C15ULL));
    h = mix64(h ^ (b + 0xC2B2AE3D27D4EB4FULL));
    h = mix64(h ^ (lane + 0x165667B19E3779F9ULL));
    return h;
}

// Maps a u64 to a double in [0, 1).
inline double to_unit_double(uint64_t u) {
    return static_cast<double>(u >> 11) * 0x1.0p-53;
}

// xoshiro256++ (Blackman/Vigna), seeded through SplitMix64.
class Rng {
  public:
    explicit Rng(uint64_t seed) {
        uint64_t s = seed;
        for (auto& w : state_) w = splitmix64(s);
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

    double uniform() { return to_unit_double(next_u64()); } // [0, 1)
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    double exponential(double rate);
    // Unbiased integer in [0, n).
    uint64_t below(uint64_t n);

  private:
    static uint64_t rotl(uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }
    std::array<uint64_t, 4> state_{};
};

// Exact Poisson(mean) count. Knuth inversion on chunks of mean <= 16 summed,
// so it stays exact for the large means a big window produces.
uint64_t poisson_count(Rng& rng, double mean);

// Seed lanes: point process, edge weights and percolation labels never share
// a stream, so a scene can be re-dressed with fresh weights.
enum class SeedLane : uint64_t { points = 1, weights = 2, percolation = 3 };

// Stable derivation of per-replicate seeds; injective over (lane, index) for
// a fixed master seed in every regime we can test.
inline uint64_t derive_seed(uint64_t master_seed, SeedLane lane, uint64_t replicate_index) {
    uint64_t h = mix64(master_seed ^ 0xA0761D6478BD642FULL);
    h = mix64(h ^ (static_cast<uint64_t>(lane) * 0xE7037ED1A0B428DBULL));
    h = mix64(h ^ (replicate_index + 0x8EBC6AF09C88C6E3ULL));
    return h;
}

} // namespace fpplab
