#pragma once

// Seeded parameter generation. The generator is a fixed 64-bit LCG so that
// parameter streams are identical across builds, platforms and languages.

#include "ruehrkit/exact_math.hpp"

#include <cstdint>

namespace ruehrkit {

class FuzzSource {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit FuzzSource(std::uint64_t seed) : state_(seed) {}

  /// Advances the state and returns its high 32 bits (the low bits of a
  /// power-of-two LCG have short periods).
  std::uint32_t next() {
    state_ = kMultiplier * state_ + kIncrement;
    return static_cast<std::uint32_t>(state_ >> 32);
  }

  /// Integer in [lo, hi]; one generator step. Requires lo <= hi.
  long uniform(long lo, long hi);

  [[nodiscard]] std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

/// Numerator uniform in [-num_bound, num_bound] \ {0}, denominator uniform
/// in [1, den_bound], then reduced. Consumes exactly two generator steps.
/// Throws std::invalid_argument if either bound is < 1.
Rational fuzz_rational(FuzzSource& src, long num_bound, long den_bound);

/// Probability num/den with den uniform in [1, den_bound] and num uniform in
/// [0, den] (or [1, den] when allow_zero is false). Two generator steps.
Rational fuzz_probability(FuzzSource& src, long den_bound, bool allow_zero);

}  // namespace ruehrkit
