#include "dubins_rrt/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dubins_rrt/errors.hpp"
#include "dubins_rrt/spatial_index.hpp"

namespace dubins_rrt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double euclid_or_dubins(NearestMetric metric, const Pose& from, const Pose& to, double rho) {
  if (metric == NearestMetric::Euclidean) return distance(from, to);
  return shortest_path(from, to, rho).length();
}

bool is_goal(const Pose& p, const Pose& goal, const GoalTolerance& tol) {
  return distance(p, goal) <= tol.position && angle_distance(p.theta(), goal.theta()) <= tol.heading;
}

}  // namespace

SearchTree::SearchTree(const Pose& root) {
  nodes_.push_back(TreeNode{0, root, std::nullopt, std::nullopt, 0.0});
  children_.emplace_back();
}

std::size_t SearchTree::add(std::size_t parent, const Pose& pose, const DubinsPath& edge) {
  const std::size_t id = nodes_.size();
  nodes_.push_back(TreeNode{id, pose, parent, edge, nodes_[parent].cost + edge.length()});
  children_.emplace_back();
  children_[parent].push_back(id);
  return id;
}

bool SearchTree::is_ancestor(std::size_t candidate, std::size_t node) const {
  std::optional<std::size_t> cur = node;
  while (cur) {
    if (*cur == candidate) return true;
    cur = nodes_[*cur].parent;
  }
  return false;
}

void SearchTree::reparent(std::size_t id, std::size_t new_parent, const DubinsPath& edge) {
  TreeNode& n = nodes_[id];
  auto& siblings = children_[*n.parent];
  siblings.erase(std::find(siblings.begin(), siblings.end(), id));
  children_[new_parent].push_back(id);
  n.parent = new_parent;
  n.edge = edge;
  // Depth-first recompute keeps cost == parent.cost + edge.length exactly.
  std::vector<std::size_t> stack{id};
  while (!stack.empty()) {
    const std::size_t cur = stack.back();
    stack.pop_back();
    TreeNode& c = nodes_[cur];
    c.cost = nodes_[*c.parent].cost + c.edge->length();
    for (const std::size_t child : children_[cur]) stack.push_back(child);
  }
}

std::size_t rewire_neighbors(SearchTree& tree, std::size_t new_id, std::span<const std::size_t> neighbors,
                             const Environment& env, const PlannerConfig& cfg, PlanStats& stats) {
  const Pose new_pose = tree[new_id].pose;
  std::size_t count = 0;
  for (const std::size_t id : neighbors) {
    if (id == 0 || id == new_id || id == tree[new_id].parent) continue;
    const DubinsPath path = shortest_path(new_pose, tree[id].pose, cfg.rho);
    if (path.length() <= 0.0 || path.length() > cfg.rewire_radius) continue;
    if (!(tree[new_id].cost + path.length() < tree[id].cost)) continue;
    if (tree.is_ancestor(id, new_id)) continue;
    ++stats.collision_checks;
    if (!env.path_certified_free(path, cfg.collision_resolution)) continue;
    tree.reparent(id, new_id, path);
    ++stats.rewires;
    ++count;
  }
  return count;
}

namespace {

/// Nearest / radius queries, either by linear scan or through the grid index.
class Locator {
 public:
  Locator(const Environment& env, const PlannerConfig& cfg)
      : cfg_(cfg), index_(env.bounds(), std::max(cfg.rho, std::max(env.bounds().width(), env.bounds().height()) / 128.0)) {}

  void insert(std::size_t id, const Pose& p) {
    if (cfg_.spatial_index) index_.insert(id, p.position());
  }

  std::size_t nearest(const SearchTree& tree, const Pose& target) const {
    auto metric = [&](std::size_t id) { return euclid_or_dubins(cfg_.nearest_metric, tree[id].pose, target, cfg_.rho); };
    if (cfg_.spatial_index) return *index_.nearest(target.position(), metric);
    double best = kInf;
    std::size_t best_id = 0;
    for (std::size_t id = 0; id < tree.size(); ++id) {
      const double v = metric(id);
      if (v < best) {
        best = v;
        best_id = id;
      }
    }
    return best_id;
  }

  std::vector<std::size_t> within(const SearchTree& tree, const Pose& target, double radius) const {
    if (cfg_.spatial_index) return index_.within(target.position(), radius);
    std::vector<std::size_t> out;
    const double reach = neighbor_reach(radius);
    for (std::size_t id = 0; id < tree.size(); ++id) {
      if (distance(tree[id].pose, target) <= reach) out.push_back(id);
    }
    return out;
  }

 private:
  const PlannerConfig& cfg_;
  GridIndex index_;
};

struct Candidate {
  std::size_t id;
  DubinsPath path;
  double cost;
};

class Planner {
 public:
  Planner(const Environment& env, const Pose& start, const Pose& goal, const PlannerConfig& cfg, bool star)
      : env_(env), goal_(goal), cfg_(cfg), star_(star), tree_(start), locator_(env, cfg), rng_(cfg.seed) {
    cfg_.validate();
    if (env_.pose_in_collision(start)) {
      throw InvalidStart("start pose (" + std::to_string(start.x()) + ", " + std::to_string(start.y()) + ") is in collision");
    }
    if (env_.pose_in_collision(goal)) {
      throw InvalidGoal("goal pose (" + std::to_string(goal.x()) + ", " + std::to_string(goal.y()) + ") is in collision");
    }
    locator_.insert(0, start);
    note_if_goal(0);
  }

  PlanResult run() {
    PlanResult result;
    result.best_cost_trace.reserve(cfg_.n_iter);
    for (std::size_t it = 0; it < cfg_.n_iter; ++it) {
      iterate();
      result.best_cost_trace.push_back(best_goal_cost());
    }
    result.iterations_used = cfg_.n_iter;
    connect_goal();
    result.solution = extract_solution(tree_.nodes(), goal_ids_, cfg_.collision_resolution);
    result.stats = stats_;
    result.tree = tree_.release();
    return result;
  }

 private:
  bool collides(const DubinsPath& path) {
    ++stats_.collision_checks;
    return !env_.path_certified_free(path, cfg_.collision_resolution);
  }

  void note_if_goal(std::size_t id) {
    if (is_goal(tree_[id].pose, goal_, cfg_.goal_tolerance)) goal_ids_.push_back(id);
  }

  double best_goal_cost() const {
    double best = kInf;
    for (const std::size_t id : goal_ids_) best = std::min(best, tree_[id].cost);
    return best;
  }

  void iterate() {
    const Pose sample = sample_pose(env_, rng_, goal_, cfg_.goal_bias, cfg_.goal_facing_heading);
    const std::size_t near_id = locator_.nearest(tree_, sample);
    const SteerResult st = steer(tree_[near_id].pose, sample, cfg_.rho, cfg_.step_max);
    // A sample on top of an existing node gives no usable extension.
    if (st.path.length() <= 0.0) return;
    if (collides(st.path)) return;

    std::size_t parent = near_id;
    DubinsPath edge = st.path;
    std::vector<std::size_t> neighbors;
    if (star_) {
      neighbors = locator_.within(tree_, st.reached, cfg_.rewire_radius);
      if (!cfg_.paper_strict_rewire) choose_parent(neighbors, st, parent, edge);
    }
    const std::size_t new_id = tree_.add(parent, st.reached, edge);
    locator_.insert(new_id, st.reached);
    ++stats_.nodes_added;
    note_if_goal(new_id);
    if (star_) rewire_neighbors(tree_, new_id, neighbors, env_, cfg_, stats_);
  }

  void choose_parent(const std::vector<std::size_t>& neighbors, const SteerResult& st, std::size_t& parent,
                     DubinsPath& edge) {
    const double via_nearest = tree_[parent].cost + st.path.length();
    std::vector<Candidate> better;
    for (const std::size_t id : neighbors) {
      if (id == parent) continue;
      DubinsPath path = shortest_path(tree_[id].pose, st.reached, cfg_.rho);
      if (path.length() <= 0.0 || path.length() > cfg_.rewire_radius) continue;
      const double cost = tree_[id].cost + path.length();
      if (cost < via_nearest) better.push_back({id, std::move(path), cost});
    }
    std::sort(better.begin(), better.end(),
              [](const Candidate& a, const Candidate& b) { return a.cost < b.cost || (a.cost == b.cost && a.id < b.id); });
    for (const auto& c : better) {
      if (!collides(c.path)) {
        parent = c.id;
        edge = c.path;
        return;
      }
    }
  }

  // Direct Dubins connection to the exact goal from whichever node gives the
  // cheapest collision-free total. Nodes are scanned by the Euclidean lower bound.
  void connect_goal() {
    double best = best_goal_cost();
    std::vector<std::pair<double, std::size_t>> order;
    order.reserve(tree_.size());
    for (std::size_t id = 0; id < tree_.size(); ++id) order.emplace_back(tree_[id].cost + distance(tree_[id].pose, goal_), id);
    std::sort(order.begin(), order.end());

    std::optional<Candidate> winner;
    for (const auto& [bound, id] : order) {
      if (bound >= best) break;
      DubinsPath path = shortest_path(tree_[id].pose, goal_, cfg_.rho);
      if (path.length() <= 0.0) continue;
      const double cost = tree_[id].cost + path.length();
      if (cost >= best || collides(path)) continue;
      best = cost;
      winner = Candidate{id, std::move(path), cost};
    }
    if (winner) {
      const std::size_t gid = tree_.add(winner->id, goal_, winner->path);
      ++stats_.nodes_added;
      goal_ids_.push_back(gid);
    }
  }

  const Environment& env_;
  Pose goal_;
  const PlannerConfig& cfg_;
  bool star_;
  SearchTree tree_;
  Locator locator_;
  Rng rng_;
  PlanStats stats_;
  std::vector<std::size_t> goal_ids_;
};

}  // namespace

PlannerConfig PlannerConfig::for_radius(double rho) {
  PlannerConfig cfg;
  cfg.rho = rho;
  cfg.step_max = 5.0 * rho;
  cfg.rewire_radius = 5.0 * rho;
  cfg.collision_resolution = rho / 20.0;
  return cfg;
}

void PlannerConfig::validate() const {
  if (n_iter < 1) throw InvalidConfig("n_iter must be at least 1");
  if (!(rho > 0.0) || !std::isfinite(rho)) throw InvalidConfig("rho must be positive");
  if (step_max && !(*step_max > 0.0)) throw InvalidConfig("step_max must be positive when set");
  if (!(rewire_radius > 0.0)) throw InvalidConfig("rewire_radius must be positive");
  if (!(goal_bias >= 0.0 && goal_bias <= 1.0)) throw InvalidConfig("goal_bias must lie in [0, 1]");
  if (!(collision_resolution > 0.0)) throw InvalidConfig("collision_resolution must be positive");
  if (!(goal_tolerance.position >= 0.0) || !(goal_tolerance.heading >= 0.0)) {
    throw InvalidConfig("goal tolerances must be non-negative");
  }
}

Pose sample_pose(const Environment& env, Rng& rng, const Pose& goal, double goal_bias, bool goal_facing_heading) {
  if (rng.uniform() < goal_bias) return goal;
  const Box& b = env.bounds();
  const double x = rng.uniform(b.xmin, b.xmax);
  const double y = rng.uniform(b.ymin, b.ymax);
  const double theta = rng.uniform(0.0, kTwoPi);
  if (goal_facing_heading) return {x, y, std::atan2(goal.y() - y, goal.x() - x)};
  return {x, y, theta};
}

std::size_t nearest(std::span<const TreeNode> tree, const Pose& target, double rho) {
  if (tree.empty()) throw InvalidConfig("nearest() on an empty tree");
  double best = kInf;
  std::size_t best_id = tree.front().id;
  for (const auto& n : tree) {
    const double v = shortest_path(n.pose, target, rho).length();
    if (v < best || (v == best && n.id < best_id)) {
      best = v;
      best_id = n.id;
    }
  }
  return best_id;
}

SteerResult steer(const Pose& from, const Pose& to, double rho, std::optional<double> step_max) {
  DubinsPath full = shortest_path(from, to, rho);
  if (!step_max || full.length() <= *step_max) return {full, to};
  DubinsPath cut = full.truncated(*step_max);
  const Pose reached = cut.end();
  return {std::move(cut), reached};
}

std::optional<Solution> extract_solution(std::span<const TreeNode> tree, std::span<const std::size_t> goal_ids,
                                         double resolution) {
  std::optional<std::size_t> best;
  for (const std::size_t id : goal_ids) {
    if (!best || tree[id].cost < tree[*best].cost || (tree[id].cost == tree[*best].cost && id < *best)) best = id;
  }
  if (!best) return std::nullopt;

  Solution sol;
  for (std::optional<std::size_t> cur = best; cur; cur = tree[*cur].parent) sol.nodes.push_back(*cur);
  std::reverse(sol.nodes.begin(), sol.nodes.end());

  sol.samples.push_back({0.0, tree[sol.nodes.front()].pose});
  for (std::size_t i = 1; i < sol.nodes.size(); ++i) {
    const TreeNode& node = tree[sol.nodes[i]];
    const DubinsPath& edge = *node.edge;
    const double base = tree[*node.parent].cost;
    const std::size_t intervals = Environment::sample_count(edge.length(), resolution) - 1;
    const double spacing = edge.length() / static_cast<double>(intervals);
    for (std::size_t k = 1; k <= intervals; ++k) {
      const double s = k == intervals ? edge.length() : spacing * static_cast<double>(k);
      sol.samples.push_back({base + s, from_canonical(edge, s)});
    }
    sol.total_length += edge.length();
  }
  return sol;
}

PlanResult rrt_plan(const Environment& env, const Pose& start, const Pose& goal, const PlannerConfig& cfg) {
  return Planner(env, start, goal, cfg, false).run();
}

PlanResult rrt_star_plan(const Environment& env, const Pose& start, const Pose& goal, const PlannerConfig& cfg) {
  return Planner(env, start, goal, cfg, true).run();
}

std::string_view to_string(Algorithm algorithm) { return algorithm == Algorithm::Rrt ? "rrt" : "rrt-star"; }

std::optional<Algorithm> algorithm_from_string(std::string_view name) {
  if (name == "rrt") return Algorithm::Rrt;
  if (name == "rrt-star" || name == "rrt_star" || name == "rrt*") return Algorithm::RrtStar;
  return std::nullopt;
}

PlanResult plan(Algorithm algorithm, const Environment& env, const Pose& start, const Pose& goal,
                const PlannerConfig& cfg) {
  return algorithm == Algorithm::Rrt ? rrt_plan(env, start, goal, cfg) : rrt_star_plan(env, start, goal, cfg);
}

}  // namespace dubins_rrt
