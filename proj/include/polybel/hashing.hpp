#pragma once

#include <cstdint>

namespace polybel::hashing {

// splitmix64 finalizer; statistically strong, fully deterministic.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Sequence-combining accumulator in the style of boost::hash_range.
inline void accumulate(std::uint64_t& seed, std::uint64_t value) {
    seed = mix64(seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2)));
}

inline constexpr std::uint64_t kHashSeed = 0x243f6a8885a308d3ULL;
inline constexpr std::uint64_t kRingSeparator = 0x452821e638d01377ULL;
inline constexpr std::uint64_t kWordDomain = 0xc0ac29b7c97c50ddULL;

}  // namespace polybel::hashing
