#include "dubins_rrt/environment.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>
#include <boost/geometry/geometries/multi_polygon.hpp>

#include "dubins_rrt/errors.hpp"

namespace dubins_rrt {

namespace {

namespace bg = boost::geometry;
using BgPoint = bg::model::d2::point_xy<double>;
using BgPolygon = bg::model::polygon<BgPoint, /*ClockWise=*/false, /*Closed=*/true>;
using BgMulti = bg::model::multi_polygon<BgPolygon>;

BgPolygon to_bg(const std::vector<Point2>& pts) {
  BgPolygon poly;
  for (const auto& p : pts) bg::append(poly.outer(), BgPoint(p.x, p.y));
  bg::correct(poly);
  return poly;
}

// Hull of one edge swept by the offset polygon.
BgPolygon swept_edge(Point2 a, Point2 b, const std::vector<Point2>& offsets) {
  bg::model::multi_point<BgPoint> cloud;
  for (const auto& o : offsets) {
    bg::append(cloud, BgPoint(a.x + o.x, a.y + o.y));
    bg::append(cloud, BgPoint(b.x + o.x, b.y + o.y));
  }
  BgPolygon hull;
  bg::convex_hull(cloud, hull);
  return hull;
}

Polygon inflate_one(const Polygon& poly, const std::vector<Point2>& offsets) {
  // P ⊕ Q = P ∪ (∂P ⊕ Q) for convex Q containing the origin.
  BgMulti acc;
  acc.push_back(to_bg(poly.vertices()));
  const auto& v = poly.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    BgMulti next;
    bg::union_(acc, swept_edge(v[i], v[(i + 1) % v.size()], offsets), next);
    acc = std::move(next);
  }
  if (acc.empty()) throw InvalidPolygon("inflation produced an empty polygon");

  const BgPolygon* largest = &acc.front();
  for (const auto& p : acc) {
    if (bg::area(p) > bg::area(*largest)) largest = &p;
  }
  std::vector<Point2> ring;
  for (const auto& p : largest->outer()) ring.push_back({p.x(), p.y()});
  return Polygon(std::move(ring));
}

}  // namespace

std::vector<Polygon> inflate(const std::vector<Polygon>& obstacles, double radius) {
  if (!(radius >= 0.0) || !std::isfinite(radius)) throw InvalidConfig("inflation radius must be non-negative");
  if (radius == 0.0) return obstacles;

  const double circumradius = radius / std::cos(kPi / kInflationSides);
  std::vector<Point2> offsets;
  for (int k = 0; k < kInflationSides; ++k) {
    const double a = kTwoPi * k / kInflationSides;
    offsets.push_back({circumradius * std::cos(a), circumradius * std::sin(a)});
  }
  std::vector<Polygon> out;
  out.reserve(obstacles.size());
  for (const auto& poly : obstacles) out.push_back(inflate_one(poly, offsets));
  return out;
}

Environment::Environment(Box bounds, std::vector<Polygon> obstacles, double inflation_radius)
    : bounds_(bounds), obstacles_(std::move(obstacles)), inflation_radius_(inflation_radius) {
  if (!(bounds_.xmax > bounds_.xmin && bounds_.ymax > bounds_.ymin)) throw InvalidConfig("world bounds are empty");
  for (std::size_t i = 0; i < obstacles_.size(); ++i) {
    for (const auto& v : obstacles_[i].vertices()) {
      if (!bounds_.contains(v)) throw InvalidConfig("obstacle " + std::to_string(i) + " lies outside the world bounds");
    }
  }
  inflated_ = inflate(obstacles_, inflation_radius_);
}

bool Environment::point_in_collision(Point2 p) const {
  if (!bounds_.contains(p)) return true;
  for (const auto& poly : inflated_) {
    if (poly.contains(p)) return true;
  }
  return false;
}

std::size_t Environment::sample_count(double length, double resolution) {
  if (!(resolution > 0.0)) throw InvalidConfig("collision resolution must be positive");
  std::size_t intervals = 1;
  while (length / static_cast<double>(intervals) > resolution) intervals *= 2;
  return intervals + 1;
}

bool Environment::path_in_collision(const DubinsPath& path, double resolution) const {
  const std::size_t intervals = sample_count(path.length(), resolution) - 1;
  const double spacing = path.length() / static_cast<double>(intervals);
  for (std::size_t k = 0; k <= intervals; ++k) {
    const double s = k == intervals ? path.length() : spacing * static_cast<double>(k);
    if (point_in_collision(from_canonical(path, s).position())) return true;
  }
  return false;
}

double Environment::clearance(Point2 p, double cap) const {
  if (point_in_collision(p)) return 0.0;
  double c = std::min({cap, p.x - bounds_.xmin, bounds_.xmax - p.x, p.y - bounds_.ymin, bounds_.ymax - p.y});
  for (const auto& poly : inflated_) {
    const Box& b = poly.bbox();
    const double dx = std::max({b.xmin - p.x, 0.0, p.x - b.xmax});
    const double dy = std::max({b.ymin - p.y, 0.0, p.y - b.ymax});
    if (std::hypot(dx, dy) >= c) continue;
    const auto& v = poly.vertices();
    for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) c = std::min(c, point_segment_distance(p, v[j], v[i]));
  }
  return c;
}

bool Environment::path_certified_free(const DubinsPath& path, double resolution) const {
  const std::size_t intervals = sample_count(path.length(), resolution) - 1;
  const double length = path.length();
  const double spacing = length / static_cast<double>(intervals);
  const double min_gap = 1e-9 * std::max(1.0, length);
  auto clear_at = [&](double s) { return clearance(from_canonical(path, s).position(), spacing); };

  struct Span {
    double a, ca, b, cb;
  };
  std::vector<Span> todo;
  todo.reserve(intervals + 8);
  double prev_s = 0.0;
  double prev_c = clear_at(0.0);
  if (prev_c <= 0.0) return false;
  for (std::size_t k = 1; k <= intervals; ++k) {
    const double s = k == intervals ? length : spacing * static_cast<double>(k);
    const double c = clear_at(s);
    if (c <= 0.0) return false;
    todo.push_back({prev_s, prev_c, s, c});
    prev_s = s;
    prev_c = c;
  }
  // Arc length bounds Euclidean distance, so a sample with clearance c frees
  // every path point within arc length c of it.
  while (!todo.empty()) {
    const Span sp = todo.back();
    todo.pop_back();
    if (sp.ca + sp.cb > sp.b - sp.a) continue;
    if (sp.b - sp.a < min_gap) return false;
    const double m = 0.5 * (sp.a + sp.b);
    const double cm = clear_at(m);
    if (cm <= 0.0) return false;
    todo.push_back({sp.a, sp.ca, m, cm});
    todo.push_back({m, cm, sp.b, sp.cb});
  }
  return true;
}

}  // namespace dubins_rrt
