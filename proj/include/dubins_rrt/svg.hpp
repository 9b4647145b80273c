#pragma once

#include <optional>
#include <span>
#include <string>

#include "dubins_rrt/environment.hpp"
#include "dubins_rrt/planner.hpp"

namespace dubins_rrt {

struct SvgOptions {
  double canvas = 800.0;           // pixels along the longer world axis
  double edge_resolution = 0.25;   // arc-length spacing of tree-edge polylines
};

/// Obstacles (raw filled, inflated dashed), one polyline per tree edge, the
/// solution as a single polyline with id="solution", start and goal markers.
/// World y points up; SVG y is flipped.
std::string render_svg(const Environment& env, const Pose& start, const Pose& goal, std::span<const TreeNode> tree,
                       const std::optional<Solution>& solution, const SvgOptions& options = {});

}  // namespace dubins_rrt
