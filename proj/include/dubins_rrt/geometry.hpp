#pragma once

#include <span>
#include <vector>

#include "dubins_rrt/pose.hpp"

namespace dubins_rrt {

struct Box {
  double xmin = 0.0;
  double ymin = 0.0;
  double xmax = 0.0;
  double ymax = 0.0;

  bool contains(Point2 p) const { return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax; }
  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
};

/// Simple polygon stored counter-clockwise, without a repeated closing vertex.
class Polygon {
 public:
  /// Throws InvalidPolygon for fewer than three distinct vertices, zero area,
  /// non-finite coordinates or self-intersection. Clockwise input is reversed.
  explicit Polygon(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Box& bbox() const { return bbox_; }
  double area() const;
  Point2 centroid() const;

  /// Closed-set membership: boundary points count as inside.
  bool contains(Point2 p) const;

 private:
  std::vector<Point2> vertices_;
  Box bbox_;
};

double signed_area(std::span<const Point2> ring);
bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d);
bool is_simple(std::span<const Point2> ring);
double point_segment_distance(Point2 p, Point2 a, Point2 b);

}  // namespace dubins_rrt
