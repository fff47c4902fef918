#pragma once

#include <cstdint>

namespace coincide {

/// One round of the split-mix finaliser.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// SplitMix64: the state advances by 0x9E3779B97F4A7C15 and each output is
/// mix64 of the new state. Small, fast and easy to reproduce elsewhere.
class SplitMix64 {
public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  /// Uniform in [0, n) by reduction modulo n; n must be positive.
  constexpr std::uint64_t below(std::uint64_t n) noexcept { return next() % n; }

  /// Uniform in [0, 1) with 53 random bits.
  constexpr double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  constexpr bool chance(double p) noexcept { return uniform() < p; }

private:
  std::uint64_t state_;
};

/// Independent stream for item `index` of a run seeded with `seed`.
constexpr SplitMix64 stream_for(std::uint64_t seed, std::uint64_t index) noexcept {
  return SplitMix64(mix64(seed ^ mix64(index)));
}

} // namespace coincide
