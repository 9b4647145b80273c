#pragma once

#include <filesystem>
#include <ostream>

#include <json.hpp>

#include "dubins_rrt/planner.hpp"
#include "dubins_rrt/scenario.hpp"

namespace dubins_rrt {

/// A planner run with everything needed to re-render it.
struct SavedPlan {
  Scenario scenario;
  Algorithm algorithm;
  PlanResult result;
  double wall_time = 0.0;  // seconds
};

nlohmann::json plan_to_json(const SavedPlan& plan);

/// Solution samples are regenerated from the tree at the scenario's collision resolution.
SavedPlan plan_from_json(const nlohmann::json& doc);

SavedPlan load_plan(const std::filesystem::path& path);

/// Pose CSV with header "s,x,y,theta", 9 significant digits.
void write_pose_csv(std::ostream& out, std::span<const PathSample> samples);

/// Compact run summary: solved, length, nodes, rewires, collision checks, time.
nlohmann::json stats_to_json(const SavedPlan& plan);

}  // namespace dubins_rrt
