#pragma once

#include <cstdint>
#include <random>

namespace dubins_rrt {

/// Seeded 64-bit Mersenne Twister with a portable [0, 1) mapping, so sample
/// streams match across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1) built from the top 53 bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dubins_rrt
