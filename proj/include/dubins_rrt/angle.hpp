#pragma once

#include <cmath>
#include <numbers>

namespace dubins_rrt {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduces an angle into [0, 2π).
inline double mod2pi(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2π.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

/// Smallest absolute difference between two headings, in [0, π].
inline double angle_distance(double a, double b) {
  const double d = mod2pi(a - b);
  return d > kPi ? kTwoPi - d : d;
}

}  // namespace dubins_rrt
