#pragma once

#include <cstdint>

namespace spor {

// SplitMix64 finalizer. All randomness in the library flows through keyed
// streams built from this mixer, so results never depend on evaluation
// order or thread schedule.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_key(std::uint64_t seed, std::uint64_t a) {
    return mix64(seed ^ mix64(a));
}

inline std::uint64_t mix_key(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return mix_key(mix_key(seed, a), b);
}

inline std::uint64_t mix_key(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                             std::uint64_t c) {
    return mix_key(mix_key(seed, a, b), c);
}

// Small deterministic generator (SplitMix64 sequence).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return mix64(state_++); }

    // Uniform draw in [0, bound), bound > 0. Fixed-point multiply; the
    // modulo bias is below 2^-64 per draw.
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    // Uniform in [0, 1).
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool next_bool() { return (next() >> 63) != 0; }

private:
    std::uint64_t state_;
};

// Salts naming the independent random streams derived from a user seed.
namespace seed_domain {
constexpr std::uint64_t kEdgeTies = 0x01;
constexpr std::uint64_t kNetSample = 0x02;
constexpr std::uint64_t kTzLevels = 0x03;
constexpr std::uint64_t kBourgain = 0x04;
constexpr std::uint64_t kStarSigns = 0x05;
constexpr std::uint64_t kBaseEmbed = 0x06;
constexpr std::uint64_t kPerturb = 0x07;
} // namespace seed_domain

} // namespace spor
