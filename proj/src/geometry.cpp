#include "dubins_rrt/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "dubins_rrt/errors.hpp"

namespace dubins_rrt {

namespace {

double cross(Point2 o, Point2 a, Point2 b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

int orientation(Point2 o, Point2 a, Point2 b) {
  const double c = cross(o, a, b);
  if (c > 0.0) return 1;
  if (c < 0.0) return -1;
  return 0;
}

bool on_segment(Point2 p, Point2 a, Point2 b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

}  // namespace

double signed_area(std::span<const Point2> ring) {
  double twice = 0.0;
  for (std::size_t i = 0, n = ring.size(); i < n; ++i) {
    const Point2 a = ring[i];
    const Point2 b = ring[(i + 1) % n];
    twice += a.x * b.y - b.x * a.y;
  }
  return 0.5 * twice;
}

bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(c, a, b)) return true;
  if (o2 == 0 && on_segment(d, a, b)) return true;
  if (o3 == 0 && on_segment(a, c, d)) return true;
  if (o4 == 0 && on_segment(b, c, d)) return true;
  return false;
}

bool is_simple(std::span<const Point2> ring) {
  const std::size_t n = ring.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = ring[i];
    const Point2 b = ring[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      const Point2 c = ring[j];
      const Point2 d = ring[(j + 1) % n];
      if (adjacent) {
        // Neighbouring edges may only share their common vertex; a fold-back overlaps.
        const Point2 shared = (j == i + 1) ? b : a;
        const Point2 other_first = (j == i + 1) ? a : b;
        const Point2 other_second = (j == i + 1) ? d : c;
        if (orientation(shared, other_first, other_second) == 0) {
          const double dot = (other_first.x - shared.x) * (other_second.x - shared.x) +
                             (other_first.y - shared.y) * (other_second.y - shared.y);
          if (dot > 0.0) return false;
        }
        continue;
      }
      if (segments_intersect(a, b, c, d)) return false;
    }
  }
  return true;
}

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
  const double vx = b.x - a.x;
  const double vy = b.y - a.y;
  const double len2 = vx * vx + vy * vy;
  double t = len2 > 0.0 ? ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * vx), p.y - (a.y + t * vy));
}

Polygon::Polygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() >= 2 && vertices_.front() == vertices_.back()) vertices_.pop_back();
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  if (vertices_.size() < 3) throw InvalidPolygon("polygon needs at least three distinct vertices");
  for (const auto& v : vertices_) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y)) throw InvalidPolygon("polygon vertex is not finite");
  }
  const double a = signed_area(vertices_);
  if (a == 0.0) throw InvalidPolygon("polygon has zero area");
  if (!is_simple(vertices_)) throw InvalidPolygon("polygon is self-intersecting");
  if (a < 0.0) std::reverse(vertices_.begin(), vertices_.end());

  bbox_ = {vertices_[0].x, vertices_[0].y, vertices_[0].x, vertices_[0].y};
  for (const auto& v : vertices_) {
    bbox_.xmin = std::min(bbox_.xmin, v.x);
    bbox_.ymin = std::min(bbox_.ymin, v.y);
    bbox_.xmax = std::max(bbox_.xmax, v.x);
    bbox_.ymax = std::max(bbox_.ymax, v.y);
  }
}

double Polygon::area() const { return signed_area(vertices_); }

Point2 Polygon::centroid() const {
  double cx = 0.0;
  double cy = 0.0;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = vertices_[i];
    const Point2 b = vertices_[(i + 1) % n];
    const double w = a.x * b.y - b.x * a.y;
    cx += (a.x + b.x) * w;
    cy += (a.y + b.y) * w;
  }
  const double six_area = 6.0 * area();
  return {cx / six_area, cy / six_area};
}

bool Polygon::contains(Point2 p) const {
  if (!bbox_.contains(p)) return false;
  bool inside = false;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2 a = vertices_[i];
    const Point2 b = vertices_[j];
    if (orientation(a, b, p) == 0 && on_segment(p, a, b)) return true;
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_cross = (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x;
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

}  // namespace dubins_rrt
