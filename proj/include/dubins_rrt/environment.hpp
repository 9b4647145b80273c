#pragma once

#include <vector>

#include "dubins_rrt/dubins.hpp"
#include "dubins_rrt/geometry.hpp"

namespace dubins_rrt {

/// Number of sides of the polygon standing in for the inflation disc.
inline constexpr int kInflationSides = 16;

/// Minkowski sum of each obstacle with a regular 16-gon circumscribed about a
/// disc of `radius`. Holes closed off by the sum are filled. radius == 0 is the identity.
std::vector<Polygon> inflate(const std::vector<Polygon>& obstacles, double radius);

/// Immutable planning world: bounds plus raw and inflated obstacles.
class Environment {
 public:
  /// Throws InvalidConfig for negative radius, empty bounds, or obstacles poking out of bounds.
  Environment(Box bounds, std::vector<Polygon> obstacles, double inflation_radius);

  const Box& bounds() const { return bounds_; }
  const std::vector<Polygon>& obstacles() const { return obstacles_; }
  const std::vector<Polygon>& inflated() const { return inflated_; }
  double inflation_radius() const { return inflation_radius_; }

  /// Outside bounds, or inside / on any inflated obstacle.
  bool point_in_collision(Point2 p) const;
  bool pose_in_collision(const Pose& p) const { return point_in_collision(p.position()); }

  /// Samples `path` on the coarsest dyadic grid (length / 2^k) whose spacing is
  /// at most `resolution`. Grids nest, so refining resolution only adds samples.
  bool path_in_collision(const DubinsPath& path, double resolution) const;

  /// Distance from p to the nearest inflated obstacle or bounds edge, capped
  /// at `cap`. Zero when p is in collision.
  double clearance(Point2 p, double cap) const;

  /// True only when every point of the path, not just the samples, is free.
  /// Starts from the path_in_collision grid and bisects any interval whose
  /// endpoint clearances do not cover it. Paths passing within about 1e-9 of
  /// an obstacle are reported as blocked. Used by the planner, so accepted
  /// edges stay free under any finer resampling.
  bool path_certified_free(const DubinsPath& path, double resolution) const;

  /// Number of samples path_in_collision takes for a path of the given length.
  static std::size_t sample_count(double length, double resolution);

 private:
  Box bounds_;
  std::vector<Polygon> obstacles_;
  double inflation_radius_;
  std::vector<Polygon> inflated_;
};

}  // namespace dubins_rrt
