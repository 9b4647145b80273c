#include "dubins_rrt/spatial_index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dubins_rrt/errors.hpp"

namespace dubins_rrt {

namespace {
constexpr double kPruneSlack = 1e-9;
}

GridIndex::GridIndex(const Box& bounds, double cell_size) : bounds_(bounds), cell_(cell_size) {
  if (!(cell_size > 0.0)) throw InvalidConfig("grid cell size must be positive");
  nx_ = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(bounds.width() / cell_)));
  ny_ = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(bounds.height() / cell_)));
  buckets_.resize(nx_ * ny_);
}

std::size_t GridIndex::cell_of(double coord, double origin, std::size_t cells) const {
  const double c = std::floor((coord - origin) / cell_);
  if (c <= 0.0) return 0;
  return std::min(cells - 1, static_cast<std::size_t>(c));
}

void GridIndex::insert(std::size_t id, Point2 p) {
  if (id >= positions_.size()) positions_.resize(id + 1);
  positions_[id] = p;
  const std::size_t cx = cell_of(p.x, bounds_.xmin, nx_);
  const std::size_t cy = cell_of(p.y, bounds_.ymin, ny_);
  buckets_[cy * nx_ + cx].push_back(id);
  ++count_;
}

std::optional<std::size_t> GridIndex::nearest(Point2 target, const std::function<double(std::size_t)>& metric) const {
  if (count_ == 0) return std::nullopt;
  const auto cx = static_cast<long>(cell_of(target.x, bounds_.xmin, nx_));
  const auto cy = static_cast<long>(cell_of(target.y, bounds_.ymin, ny_));
  const long max_ring = static_cast<long>(std::max(nx_, ny_));

  double best = std::numeric_limits<double>::infinity();
  std::optional<std::size_t> best_id;
  auto visit = [&](long ix, long iy) {
    if (ix < 0 || iy < 0 || ix >= static_cast<long>(nx_) || iy >= static_cast<long>(ny_)) return;
    for (const std::size_t id : buckets_[static_cast<std::size_t>(iy) * nx_ + static_cast<std::size_t>(ix)]) {
      if (distance(positions_[id], target) > best + kPruneSlack * (1.0 + best)) continue;
      const double v = metric(id);
      if (v < best || (v == best && best_id && id < *best_id)) {
        best = v;
        best_id = id;
      }
    }
  };

  for (long ring = 0; ring <= max_ring; ++ring) {
    // Targets outside the grid clamp into it, so the bound is only valid inside.
    const double lower = bounds_.contains(target) ? static_cast<double>(ring - 1) * cell_ : 0.0;
    if (best_id && lower > best + kPruneSlack * (1.0 + best)) break;
    if (ring == 0) {
      visit(cx, cy);
      continue;
    }
    for (long ix = cx - ring; ix <= cx + ring; ++ix) {
      visit(ix, cy - ring);
      visit(ix, cy + ring);
    }
    for (long iy = cy - ring + 1; iy <= cy + ring - 1; ++iy) {
      visit(cx - ring, iy);
      visit(cx + ring, iy);
    }
  }
  return best_id;
}

std::vector<std::size_t> GridIndex::within(Point2 target, double radius) const {
  std::vector<std::size_t> out;
  const double reach = neighbor_reach(radius);
  const std::size_t x0 = cell_of(target.x - reach, bounds_.xmin, nx_);
  const std::size_t x1 = cell_of(target.x + reach, bounds_.xmin, nx_);
  const std::size_t y0 = cell_of(target.y - reach, bounds_.ymin, ny_);
  const std::size_t y1 = cell_of(target.y + reach, bounds_.ymin, ny_);
  for (std::size_t iy = y0; iy <= y1; ++iy) {
    for (std::size_t ix = x0; ix <= x1; ++ix) {
      for (const std::size_t id : buckets_[iy * nx_ + ix]) {
        if (distance(positions_[id], target) <= reach) out.push_back(id);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dubins_rrt
