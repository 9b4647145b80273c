#include "dubins_rrt/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace dubins_rrt {

namespace {

class Canvas {
 public:
  Canvas(const Box& world, double pixels)
      : world_(world), scale_(pixels / std::max(world.width(), world.height())) {}

  double width() const { return world_.width() * scale_ + 2.0 * kMargin; }
  double height() const { return world_.height() * scale_ + 2.0 * kMargin; }
  double scale() const { return scale_; }

  std::string xy(Point2 p) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f,%.2f", kMargin + (p.x - world_.xmin) * scale_,
                  kMargin + (world_.ymax - p.y) * scale_);
    return buf;
  }

 private:
  static constexpr double kMargin = 10.0;
  Box world_;
  double scale_;
};

std::string points_attr(const Canvas& c, std::span<const Point2> pts) {
  std::string out;
  for (const auto& p : pts) {
    if (!out.empty()) out += ' ';
    out += c.xy(p);
  }
  return out;
}

std::vector<Point2> edge_points(const DubinsPath& edge, double resolution) {
  const std::size_t intervals = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(edge.length() / resolution)));
  std::vector<Point2> pts;
  for (std::size_t k = 0; k <= intervals; ++k) {
    const double s = k == intervals ? edge.length() : edge.length() * static_cast<double>(k) / static_cast<double>(intervals);
    pts.push_back(from_canonical(edge, s).position());
  }
  return pts;
}

void pose_marker(std::ostringstream& os, const Canvas& c, const Pose& p, const char* id, const char* colour) {
  const Point2 tip{p.x() + 0.8 * std::cos(p.theta()), p.y() + 0.8 * std::sin(p.theta())};
  const std::string centre = c.xy(p.position());
  const auto comma = centre.find(',');
  os << "  <g id=\"" << id << "\">\n"
     << "    <circle cx=\"" << centre.substr(0, comma) << "\" cy=\"" << centre.substr(comma + 1) << "\" r=\"5\" fill=\""
     << colour << "\"/>\n"
     << "    <polyline points=\"" << centre << ' ' << c.xy(tip) << "\" stroke=\"" << colour
     << "\" stroke-width=\"2\" fill=\"none\"/>\n"
     << "  </g>\n";
}

}  // namespace

std::string render_svg(const Environment& env, const Pose& start, const Pose& goal, std::span<const TreeNode> tree,
                       const std::optional<Solution>& solution, const SvgOptions& options) {
  const Canvas c(env.bounds(), options.canvas);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << c.width() << "\" height=\"" << c.height()
     << "\" viewBox=\"0 0 " << c.width() << ' ' << c.height() << "\">\n";
  const Box& b = env.bounds();
  const std::vector<Point2> frame{{b.xmin, b.ymin}, {b.xmax, b.ymin}, {b.xmax, b.ymax}, {b.xmin, b.ymax}};
  os << "  <polygon id=\"bounds\" points=\"" << points_attr(c, frame) << "\" fill=\"white\" stroke=\"black\"/>\n";

  os << "  <g id=\"inflated\" fill=\"none\" stroke=\"#888888\" stroke-dasharray=\"4 3\">\n";
  for (const auto& poly : env.inflated()) os << "    <polygon points=\"" << points_attr(c, poly.vertices()) << "\"/>\n";
  os << "  </g>\n";
  os << "  <g id=\"obstacles\" fill=\"#444444\" stroke=\"none\">\n";
  for (const auto& poly : env.obstacles()) os << "    <polygon points=\"" << points_attr(c, poly.vertices()) << "\"/>\n";
  os << "  </g>\n";

  os << "  <g id=\"tree\" fill=\"none\" stroke=\"#3b7dd8\" stroke-width=\"0.8\">\n";
  for (const auto& node : tree) {
    if (!node.edge) continue;
    os << "    <polyline class=\"edge\" points=\"" << points_attr(c, edge_points(*node.edge, options.edge_resolution))
       << "\"/>\n";
  }
  os << "  </g>\n";

  if (solution) {
    std::vector<Point2> pts;
    pts.reserve(solution->samples.size());
    for (const auto& s : solution->samples) pts.push_back(s.pose.position());
    os << "  <polyline id=\"solution\" points=\"" << points_attr(c, pts)
       << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2.5\"/>\n";
  }
  pose_marker(os, c, start, "start", "#2ca02c");
  pose_marker(os, c, goal, "goal", "#d62728");
  os << "</svg>\n";
  return os.str();
}

}  // namespace dubins_rrt
