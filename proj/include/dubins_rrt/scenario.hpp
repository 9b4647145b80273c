#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "dubins_rrt/environment.hpp"
#include "dubins_rrt/planner.hpp"

namespace dubins_rrt {

/// A planning problem as stored on disk.
///
/// Document layout (JSON, unknown keys rejected at every level):
///
///   {
///     "bounds": {"xmin": 0, "ymin": 0, "xmax": 20, "ymax": 20},
///     "inflation_radius": 0.5,
///     "obstacles": [[[x, y], [x, y], [x, y], ...], ...],
///     "start": {"x": 1, "y": 1, "theta": 0},
///     "goal":  {"x": 18, "y": 18, "theta": 1.5707963267948966},
///     "planner": { ...PlannerConfig fields, all optional... }
///   }
///
/// Angles are radians. Missing planner fields take PlannerConfig::for_radius(rho).
struct Scenario {
  Environment env;
  Pose start;
  Pose goal;
  PlannerConfig config;
};

Environment environment_from_json(const nlohmann::json& doc);
nlohmann::json environment_to_json(const Environment& env);

PlannerConfig config_from_json(const nlohmann::json& doc);
nlohmann::json config_to_json(const PlannerConfig& cfg);

Pose pose_from_json(const nlohmann::json& doc, const char* what);
nlohmann::json pose_to_json(const Pose& p);

/// Throws ScenarioError on malformed input; geometry errors are rethrown as ScenarioError too.
Scenario scenario_from_json(const nlohmann::json& doc);
nlohmann::json scenario_to_json(const Scenario& s);

Scenario load_scenario(const std::filesystem::path& path);
void save_scenario(const Scenario& s, const std::filesystem::path& path);

/// Reads and parses a JSON file, mapping I/O and syntax failures to ScenarioError.
nlohmann::json read_json_file(const std::filesystem::path& path);

/// Pretty-printed JSON; doubles are written in shortest round-trip form.
void write_json_file(const nlohmann::json& doc, const std::filesystem::path& path);

}  // namespace dubins_rrt
