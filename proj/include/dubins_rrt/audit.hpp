#pragma once

#include <span>
#include <string>
#include <vector>

#include "dubins_rrt/environment.hpp"
#include "dubins_rrt/planner.hpp"

namespace dubins_rrt {

struct AuditReport {
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
};

/// Full-tree validation: single root with zero cost, acyclic parent links,
/// cost == parent.cost + edge.length (1e-9), each edge starting at its parent
/// and replaying onto its child (1e-6·rho, 1e-6 rad), and every edge free of
/// collision when sampled at `resolution`.
AuditReport audit_tree(std::span<const TreeNode> tree, const Environment& env, double resolution);

/// Tree audit plus solution checks: chain is connected, total length matches
/// the edge sum (1e-9) and the sampled poses are collision-free.
AuditReport audit_result(const PlanResult& result, const Environment& env, double resolution);

}  // namespace dubins_rrt
