#pragma once

#include <cstdint>

namespace aquamass {

/// Deterministic PRNG behind every random draw in the toolkit.
///
/// The generator is pinned down to the bit so that independent
/// implementations reproduce identical sample streams from the same
/// 64-bit seed:
///
///   seeding (splitmix64, four outputs fill the state):
///     z  = (seed += 0x9E3779B97F4A7C15)
///     z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
///     z ^= z >> 27;  z *= 0x94D049BB133111EB
///     s[i] = z ^ (z >> 31)
///
///   next() (xoshiro256**):
///     result = rotl64(s[1] * 5, 7) * 9
///     t = s[1] << 17
///     s[2] ^= s[0];  s[3] ^= s[1];  s[1] ^= s[2];  s[0] ^= s[3]
///     s[2] ^= t;     s[3] = rotl64(s[3], 45)
///
///   next_double() = (next() >> 11) * 2^-53, uniform in [0, 1).
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : state_) {
            x += 0x9E3779B97F4A7C15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
            word = z ^ (z >> 31);
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform in [0, 1), 53 random mantissa bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + next_double() * (hi - lo);
    }

    /// Uniform integer in [0, n). n must be nonzero.
    std::uint64_t below(std::uint64_t n) {
        return next() % n;
    }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }

    std::uint64_t state_[4];
};

}  // namespace aquamass
