#pragma once

#include <cstdint>
#include <random>

namespace egf {

/// Seedable generator with a fixed, platform-independent output stream.
///
/// The engine is std::mt19937_64, whose sequence is pinned by the C++
/// standard. Doubles are formed from the top 53 bits of each draw rather than
/// through std::uniform_real_distribution, whose algorithm is left to the
/// library vendor.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1).
  double uniform();

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace egf
