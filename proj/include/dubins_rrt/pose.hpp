#pragma once

#include <cmath>

#include "dubins_rrt/angle.hpp"

namespace dubins_rrt {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline double distance(Point2 a, Point2 b) { return std::hypot(b.x - a.x, b.y - a.y); }

/// Vehicle configuration (x, y, heading). The heading is always kept in [0, 2π).
class Pose {
 public:
  Pose() = default;
  Pose(double x, double y, double theta) : x_(x), y_(y), theta_(mod2pi(theta)) {}

  double x() const { return x_; }
  double y() const { return y_; }
  double theta() const { return theta_; }
  Point2 position() const { return {x_, y_}; }

  friend bool operator==(const Pose&, const Pose&) = default;

 private:
  double x_ = 0.0;
  double y_ = 0.0;
  double theta_ = 0.0;
};

inline double distance(const Pose& a, const Pose& b) { return distance(a.position(), b.position()); }

}  // namespace dubins_rrt
