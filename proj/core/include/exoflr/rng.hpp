#pragma once

#include <cstdint>

#include "exoflr/normal.hpp"

namespace exoflr {

namespace detail {

// SplitMix64 finalizer (Stafford mix 13).
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

}  // namespace detail

/// Derives the state of an independent substream from a master seed and up to
/// two lane indices. Used to give every Monte Carlo repetition and every
/// bootstrap replicate its own stream, so results do not depend on execution
/// order or on the number of worker threads.
constexpr std::uint64_t substream(std::uint64_t seed, std::uint64_t lane,
                                  std::uint64_t slot = 0) noexcept {
  std::uint64_t h = detail::mix64(seed + detail::kGolden);
  h = detail::mix64(h ^ (lane + detail::kGolden));
  h = detail::mix64(h ^ (slot + 0xD1B54A32D192ED03ULL));
  return h;
}

/// SplitMix64 generator. Small state, full 64-bit period, reproducible
/// across platforms; draws map to doubles without any libstdc++
/// distribution machinery so sequences are stable across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += detail::kGolden);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0,1), 53-bit resolution.
  double uniform01() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform on the open interval (0,1); safe as a quantile-function input.
  double uniform_open01() noexcept {
    return (static_cast<double>(next() >> 12) + 0.5) * 0x1.0p-52;
  }

  double uniform(double a, double b) noexcept { return a + (b - a) * uniform01(); }

  /// Standard normal draw via the inverse CDF.
  double normal() { return normal_quantile(uniform_open01()); }

 private:
  std::uint64_t state_;
};

}  // namespace exoflr
