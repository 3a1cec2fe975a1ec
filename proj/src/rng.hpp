#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

// Counter-based random streams. Every draw is a pure function of
// (seed, counter), so chunked, reordered, and parallel evaluation all
// produce the same values bit for bit. std::normal_distribution is
// implementation-defined, so the Gaussian is generated here directly.

namespace pbwdac::rng {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Seed splitting: one global seed expands into independent per-subsystem
// streams. Tags are fixed constants, so adding a subsystem never perturbs
// the streams of existing ones.
inline constexpr std::uint64_t kDomainPrbs = 0x70726273ull;
inline constexpr std::uint64_t kDomainJitter = 0x6a697474ull;
inline constexpr std::uint64_t kDomainDetector = 0x64657463ull;

inline std::uint64_t derive_seed(std::uint64_t global_seed, std::uint64_t domain,
                                 std::uint64_t index = 0) {
  return splitmix64(splitmix64(global_seed ^ domain * kGolden) + index);
}

// Uniform in [0,1) with 53 significant bits.
inline double uniform01(std::uint64_t seed, std::uint64_t counter, std::uint64_t lane = 0) {
  const std::uint64_t h = splitmix64(seed ^ splitmix64(counter * 0xd1342543de82ef95ull + lane));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Standard normal via Box-Muller.
inline double gaussian(std::uint64_t seed, std::uint64_t counter) {
  double u1 = uniform01(seed, counter, 1);
  double u2 = uniform01(seed, counter, 2);
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace pbwdac::rng
