#include "dubins_rrt/audit.hpp"

#include <cmath>
#include <sstream>

namespace dubins_rrt {

namespace {

constexpr double kCostTol = 1e-9;
constexpr double kReplayTol = 1e-6;

std::string node_msg(std::size_t id, const std::string& what) {
  std::ostringstream os;
  os << "node " << id << ": " << what;
  return os.str();
}

}  // namespace

AuditReport audit_tree(std::span<const TreeNode> tree, const Environment& env, double resolution) {
  AuditReport report;
  auto fail = [&](std::size_t id, const std::string& what) { report.problems.push_back(node_msg(id, what)); };
  if (tree.empty()) {
    report.problems.emplace_back("tree is empty");
    return report;
  }

  std::size_t roots = 0;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const TreeNode& n = tree[i];
    if (n.id != i) fail(i, "id does not match its index");
    if (!n.parent) {
      ++roots;
      if (n.cost != 0.0) fail(i, "root cost is not zero");
      if (n.edge) fail(i, "root carries an edge");
      continue;
    }
    if (*n.parent >= tree.size()) {
      fail(i, "parent index out of range");
      continue;
    }
    if (!n.edge) {
      fail(i, "missing edge from parent");
      continue;
    }
    const TreeNode& parent = tree[*n.parent];
    if (std::abs(n.cost - (parent.cost + n.edge->length())) > kCostTol) fail(i, "cost != parent.cost + edge.length");

    const double rho = n.edge->rho();
    if (distance(n.edge->start(), parent.pose) > kReplayTol * rho ||
        angle_distance(n.edge->start().theta(), parent.pose.theta()) > kReplayTol) {
      fail(i, "edge does not start at the parent pose");
    }
    const Pose end = n.edge->end();
    if (distance(end, n.pose) > kReplayTol * rho || angle_distance(end.theta(), n.pose.theta()) > kReplayTol) {
      fail(i, "edge replay misses the node pose");
    }
    if (env.path_in_collision(*n.edge, resolution)) fail(i, "edge is in collision");
  }
  if (roots != 1) report.problems.push_back("tree has " + std::to_string(roots) + " roots");

  // Every node must reach the root within tree.size() hops.
  for (std::size_t i = 0; i < tree.size(); ++i) {
    std::size_t hops = 0;
    std::optional<std::size_t> cur = i;
    while (cur && *cur < tree.size() && tree[*cur].parent && hops <= tree.size()) {
      cur = tree[*cur].parent;
      ++hops;
    }
    if (hops > tree.size()) fail(i, "parent chain contains a cycle");
  }
  return report;
}

AuditReport audit_result(const PlanResult& result, const Environment& env, double resolution) {
  AuditReport report = audit_tree(result.tree, env, resolution);
  if (!result.solution) return report;
  const Solution& sol = *result.solution;
  if (sol.nodes.empty() || result.tree[sol.nodes.front()].parent) {
    report.problems.emplace_back("solution does not start at the root");
    return report;
  }
  double sum = 0.0;
  for (std::size_t i = 1; i < sol.nodes.size(); ++i) {
    const TreeNode& n = result.tree[sol.nodes[i]];
    if (!n.parent || *n.parent != sol.nodes[i - 1]) {
      report.problems.emplace_back("solution chain is broken at node " + std::to_string(n.id));
      return report;
    }
    sum += n.edge->length();
  }
  if (std::abs(sum - sol.total_length) > kCostTol) report.problems.emplace_back("solution length != edge sum");
  for (const auto& s : sol.samples) {
    if (env.pose_in_collision(s.pose)) {
      report.problems.emplace_back("solution sample at s=" + std::to_string(s.s) + " is in collision");
      break;
    }
  }
  return report;
}

}  // namespace dubins_rrt
