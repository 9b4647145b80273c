#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dubins_rrt/dubins.hpp"
#include "dubins_rrt/environment.hpp"
#include "dubins_rrt/rng.hpp"

namespace dubins_rrt {

enum class NearestMetric { Dubins, Euclidean };

struct GoalTolerance {
  double position = 1e-6;
  double heading = 1e-6;
};

struct PlannerConfig {
  std::size_t n_iter = 500;
  double rho = 1.0;
  std::optional<double> step_max = 5.0;  // nullopt: steer all the way to the sample
  double rewire_radius = 5.0;
  GoalTolerance goal_tolerance;
  double goal_bias = 0.05;
  double collision_resolution = 0.05;
  std::uint64_t seed = 1;

  NearestMetric nearest_metric = NearestMetric::Dubins;
  bool spatial_index = true;
  /// Skip choose-parent in RRT*; only the rewire step runs.
  bool paper_strict_rewire = false;
  /// Sampled headings point at the goal instead of being uniform. Experimental.
  bool goal_facing_heading = false;

  /// Defaults scaled to a turning radius: step cap and rewire radius 5·rho, resolution rho/20.
  static PlannerConfig for_radius(double rho);

  /// Throws InvalidConfig when an invariant is violated.
  void validate() const;
};

struct TreeNode {
  std::size_t id = 0;
  Pose pose;
  std::optional<std::size_t> parent;
  std::optional<DubinsPath> edge;  // parent -> this node
  double cost = 0.0;
};

struct PathSample {
  double s = 0.0;  // arc length from the root
  Pose pose;
};

struct Solution {
  std::vector<std::size_t> nodes;  // root first
  std::vector<PathSample> samples;
  double total_length = 0.0;
};

struct PlanStats {
  std::size_t nodes_added = 0;
  std::size_t rewires = 0;
  std::size_t collision_checks = 0;
};

struct PlanResult {
  std::vector<TreeNode> tree;
  std::optional<Solution> solution;
  std::size_t iterations_used = 0;
  PlanStats stats;
  /// Cheapest goal-node cost after each iteration (+inf until one exists).
  std::vector<double> best_cost_trace;
};

/// Tree storage with child lists, so a reparent can push cost changes down
/// the moved subtree.
class SearchTree {
 public:
  explicit SearchTree(const Pose& root);

  std::size_t size() const { return nodes_.size(); }
  const TreeNode& operator[](std::size_t id) const { return nodes_[id]; }
  std::span<const TreeNode> nodes() const { return nodes_; }

  std::size_t add(std::size_t parent, const Pose& pose, const DubinsPath& edge);
  bool is_ancestor(std::size_t candidate, std::size_t node) const;
  /// Swaps the parent and edge of `id`, then recomputes costs depth-first over its subtree.
  void reparent(std::size_t id, std::size_t new_parent, const DubinsPath& edge);

  std::vector<TreeNode> release() { return std::move(nodes_); }

 private:
  std::vector<TreeNode> nodes_;
  std::vector<std::vector<std::size_t>> children_;
};

/// RRT* rewire step. Each neighbor that becomes strictly cheaper through
/// new_id, over a collision-free Dubins edge no longer than the rewire radius,
/// is reparented onto new_id. Returns the number of rewires.
std::size_t rewire_neighbors(SearchTree& tree, std::size_t new_id, std::span<const std::size_t> neighbors,
                             const Environment& env, const PlannerConfig& cfg, PlanStats& stats);

/// Goal pose with probability goal_bias, otherwise uniform position in bounds and uniform heading.
Pose sample_pose(const Environment& env, Rng& rng, const Pose& goal, double goal_bias,
                 bool goal_facing_heading = false);

/// Node whose Dubins distance to target is smallest; lowest id on ties.
std::size_t nearest(std::span<const TreeNode> tree, const Pose& target, double rho);

struct SteerResult {
  DubinsPath path;
  Pose reached;
};

/// Shortest path towards `to`, cut at `step_max` when it is longer.
SteerResult steer(const Pose& from, const Pose& to, double rho, std::optional<double> step_max);

/// Minimum-cost root-to-goal chain among goal_ids, sampled on each edge's collision grid.
std::optional<Solution> extract_solution(std::span<const TreeNode> tree, std::span<const std::size_t> goal_ids,
                                         double resolution);

/// RRT with Dubins steering. Throws InvalidStart / InvalidGoal / InvalidConfig.
PlanResult rrt_plan(const Environment& env, const Pose& start, const Pose& goal, const PlannerConfig& cfg);

/// RRT* with Dubins steering, choose-parent and rewiring.
PlanResult rrt_star_plan(const Environment& env, const Pose& start, const Pose& goal, const PlannerConfig& cfg);

enum class Algorithm { Rrt, RrtStar };

std::string_view to_string(Algorithm algorithm);
std::optional<Algorithm> algorithm_from_string(std::string_view name);

PlanResult plan(Algorithm algorithm, const Environment& env, const Pose& start, const Pose& goal,
                const PlannerConfig& cfg);

}  // namespace dubins_rrt
