#pragma once

#include <cstdint>
#include <limits>

namespace hvlc {

/// SplitMix64 finalizer; a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seedable generator with 64 bits of state (SplitMix64). Satisfies
/// UniformRandomBitGenerator, but library code draws through `unit()` so that
/// sequences do not depend on the standard library's distribution internals.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit constexpr Rng(std::uint64_t seed = 0) noexcept : state_(seed) {}

  /// Independent stream for (seed, stream id), e.g. one per box.
  static constexpr Rng stream(std::uint64_t seed, std::uint64_t id) noexcept {
    return Rng(mix64(seed ^ mix64(id + 0x9e3779b97f4a7c15ULL)));
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  constexpr double unit() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  bool operator==(const Rng&) const = default;

 private:
  std::uint64_t state_;
};

}  // namespace hvlc
