#pragma once

// Philox4x32-10 counter-based generator (Salmon, Moraes, Dror, Shaw,
// "Parallel random numbers: as easy as 1, 2, 3", SC 2011). Output matches the
// Random123 reference implementation bit for bit.

#include <array>
#include <cstdint>

namespace litgame::philox {

using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

inline constexpr std::uint32_t kMultiplier0 = 0xD2511F53;
inline constexpr std::uint32_t kMultiplier1 = 0xCD9E8D57;
inline constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
inline constexpr std::uint32_t kWeyl1 = 0xBB67AE85;
inline constexpr int kRounds = 10;

constexpr Counter round(const Counter& ctr, const Key& key) noexcept {
    const std::uint64_t p0 = std::uint64_t{kMultiplier0} * ctr[0];
    const std::uint64_t p1 = std::uint64_t{kMultiplier1} * ctr[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    return {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

/// One block of 128 random bits for the given counter under the given key.
constexpr Counter philox4x32_10(Counter ctr, Key key) noexcept {
    for (int r = 0; r < kRounds; ++r) {
        ctr = round(ctr, key);
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

/// Maps 64 random bits to a double in [0, 1) using the top 53 bits.
constexpr double to_unit(std::uint32_t lo, std::uint32_t hi) noexcept {
    const std::uint64_t bits = (std::uint64_t{hi} << 32) | lo;
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Two independent uniforms in [0, 1) that are a pure function of
/// (seed, index): counter = (index lo, index hi, 0, 0), key = (seed lo, seed hi).
struct UniformPair {
    double first;
    double second;
};

constexpr UniformPair uniform_pair(std::uint64_t seed, std::uint64_t index) noexcept {
    const Counter ctr = {static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0, 0};
    const Key key = {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    const Counter out = philox4x32_10(ctr, key);
    return {to_unit(out[0], out[1]), to_unit(out[2], out[3])};
}

}  // namespace litgame::philox
