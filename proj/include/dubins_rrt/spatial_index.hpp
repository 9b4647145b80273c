#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "dubins_rrt/geometry.hpp"

namespace dubins_rrt {

/// Euclidean search radius that `within` (and its linear-scan twin) actually uses.
inline double neighbor_reach(double radius) { return radius + 1e-9 * (1.0 + radius); }

/// Uniform bucket grid over node positions.
///
/// Queries take a distance functor whose values must never be smaller than
/// the Euclidean distance to the node (Dubins length qualifies). Rings of
/// cells are visited outward and the search stops once the ring's Euclidean
/// lower bound exceeds the best value found, so results equal a linear scan.
class GridIndex {
 public:
  GridIndex(const Box& bounds, double cell_size);

  void insert(std::size_t id, Point2 p);
  std::size_t size() const { return count_; }

  /// Id minimizing metric(id); ties go to the lowest id. Empty index returns nullopt.
  std::optional<std::size_t> nearest(Point2 target, const std::function<double(std::size_t)>& metric) const;

  /// All ids within Euclidean distance `radius` of target, ascending.
  std::vector<std::size_t> within(Point2 target, double radius) const;

 private:
  std::size_t cell_of(double coord, double origin, std::size_t cells) const;

  Box bounds_;
  double cell_;
  std::size_t nx_;
  std::size_t ny_;
  std::vector<std::vector<std::size_t>> buckets_;
  std::vector<Point2> positions_;
  std::size_t count_ = 0;
};

}  // namespace dubins_rrt
