#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "crosscut/rational.hpp"

namespace crosscut {

/// Seeded generator whose output is identical on every platform: the raw
/// mt19937_64 stream is fully specified, and ranges are drawn by rejection
/// rather than through std::uniform_int_distribution.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw = engine_();
    while (draw >= limit) draw = engine_();
    return draw % bound;
  }

  /// n / d with d uniform in [1, max_den] and n uniform in
  /// [min_num * d, max_num * d] (integer bounds scaled by d).
  Rational rational(long min_num, long max_num, unsigned long max_den) {
    const long d = static_cast<long>(1 + below(max_den));
    const long lo = min_num * d;
    const long hi = max_num * d;
    const long n = lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    return {n, d};
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace crosscut
