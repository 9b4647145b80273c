#include "dubins_rrt/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "dubins_rrt/errors.hpp"

namespace dubins_rrt {

namespace {

using nlohmann::json;

void require_object(const json& doc, const char* what) {
  if (!doc.is_object()) throw ScenarioError(std::string(what) + " must be an object");
}

void reject_unknown(const json& doc, std::initializer_list<const char*> allowed, const char* what) {
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& [key, value] : doc.items()) {
    if (!keys.contains(key)) throw ScenarioError("unknown key '" + key + "' in " + what);
  }
}

const json& field(const json& doc, const char* key, const char* what) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw ScenarioError(std::string("missing key '") + key + "' in " + what);
  return *it;
}

double number(const json& v, const char* what) {
  if (!v.is_number()) throw ScenarioError(std::string(what) + " must be a number");
  return v.get<double>();
}

bool boolean(const json& v, const char* what) {
  if (!v.is_boolean()) throw ScenarioError(std::string(what) + " must be true or false");
  return v.get<bool>();
}

std::uint64_t unsigned_integer(const json& v, const char* what) {
  if (!v.is_number_unsigned()) throw ScenarioError(std::string(what) + " must be a non-negative integer");
  return v.get<std::uint64_t>();
}

Polygon polygon_from_json(const json& doc, std::size_t index) {
  const std::string what = "obstacle " + std::to_string(index);
  if (!doc.is_array()) throw ScenarioError(what + " must be an array of [x, y] pairs");
  std::vector<Point2> pts;
  for (const auto& v : doc) {
    if (!v.is_array() || v.size() != 2) throw ScenarioError(what + " vertices must be [x, y] pairs");
    pts.push_back({number(v[0], "vertex x"), number(v[1], "vertex y")});
  }
  try {
    return Polygon(std::move(pts));
  } catch (const InvalidPolygon& e) {
    throw ScenarioError(what + ": " + e.what());
  }
}

}  // namespace

Pose pose_from_json(const json& doc, const char* what) {
  require_object(doc, what);
  reject_unknown(doc, {"x", "y", "theta"}, what);
  return {number(field(doc, "x", what), "x"), number(field(doc, "y", what), "y"),
          number(field(doc, "theta", what), "theta")};
}

json pose_to_json(const Pose& p) { return {{"x", p.x()}, {"y", p.y()}, {"theta", p.theta()}}; }

Environment environment_from_json(const json& doc) {
  require_object(doc, "environment");
  const json& b = field(doc, "bounds", "environment");
  require_object(b, "bounds");
  reject_unknown(b, {"xmin", "ymin", "xmax", "ymax"}, "bounds");
  const Box bounds{number(field(b, "xmin", "bounds"), "xmin"), number(field(b, "ymin", "bounds"), "ymin"),
                   number(field(b, "xmax", "bounds"), "xmax"), number(field(b, "ymax", "bounds"), "ymax")};
  const double radius = number(field(doc, "inflation_radius", "environment"), "inflation_radius");

  std::vector<Polygon> obstacles;
  if (const auto it = doc.find("obstacles"); it != doc.end()) {
    if (!it->is_array()) throw ScenarioError("obstacles must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) obstacles.push_back(polygon_from_json((*it)[i], i));
  }
  try {
    return Environment(bounds, std::move(obstacles), radius);
  } catch (const Error& e) {
    throw ScenarioError(std::string("invalid environment: ") + e.what());
  }
}

json environment_to_json(const Environment& env) {
  const Box& b = env.bounds();
  json obstacles = json::array();
  for (const auto& poly : env.obstacles()) {
    json ring = json::array();
    for (const auto& v : poly.vertices()) ring.push_back({v.x, v.y});
    obstacles.push_back(std::move(ring));
  }
  return {{"bounds", {{"xmin", b.xmin}, {"ymin", b.ymin}, {"xmax", b.xmax}, {"ymax", b.ymax}}},
          {"inflation_radius", env.inflation_radius()},
          {"obstacles", std::move(obstacles)}};
}

PlannerConfig config_from_json(const json& doc) {
  require_object(doc, "planner");
  reject_unknown(doc,
                 {"n_iter", "rho", "step_max", "rewire_radius", "goal_tolerance", "goal_bias", "collision_resolution",
                  "seed", "nearest_metric", "spatial_index", "paper_strict_rewire", "goal_facing_heading"},
                 "planner");
  const double rho = doc.contains("rho") ? number(doc["rho"], "rho") : 1.0;
  if (!(rho > 0.0)) throw ScenarioError("rho must be positive");
  PlannerConfig cfg = PlannerConfig::for_radius(rho);

  if (doc.contains("n_iter")) cfg.n_iter = unsigned_integer(doc["n_iter"], "n_iter");
  if (doc.contains("step_max")) {
    cfg.step_max = doc["step_max"].is_null() ? std::nullopt : std::optional<double>(number(doc["step_max"], "step_max"));
  }
  if (doc.contains("rewire_radius")) cfg.rewire_radius = number(doc["rewire_radius"], "rewire_radius");
  if (doc.contains("goal_tolerance")) {
    const json& t = doc["goal_tolerance"];
    require_object(t, "goal_tolerance");
    reject_unknown(t, {"position", "heading"}, "goal_tolerance");
    if (t.contains("position")) cfg.goal_tolerance.position = number(t["position"], "goal_tolerance.position");
    if (t.contains("heading")) cfg.goal_tolerance.heading = number(t["heading"], "goal_tolerance.heading");
  }
  if (doc.contains("goal_bias")) cfg.goal_bias = number(doc["goal_bias"], "goal_bias");
  if (doc.contains("collision_resolution")) {
    cfg.collision_resolution = number(doc["collision_resolution"], "collision_resolution");
  }
  if (doc.contains("seed")) cfg.seed = unsigned_integer(doc["seed"], "seed");
  if (doc.contains("nearest_metric")) {
    const json& m = doc["nearest_metric"];
    if (m == "dubins") {
      cfg.nearest_metric = NearestMetric::Dubins;
    } else if (m == "euclidean") {
      cfg.nearest_metric = NearestMetric::Euclidean;
    } else {
      throw ScenarioError("nearest_metric must be \"dubins\" or \"euclidean\"");
    }
  }
  if (doc.contains("spatial_index")) cfg.spatial_index = boolean(doc["spatial_index"], "spatial_index");
  if (doc.contains("paper_strict_rewire")) {
    cfg.paper_strict_rewire = boolean(doc["paper_strict_rewire"], "paper_strict_rewire");
  }
  if (doc.contains("goal_facing_heading")) {
    cfg.goal_facing_heading = boolean(doc["goal_facing_heading"], "goal_facing_heading");
  }
  try {
    cfg.validate();
  } catch (const InvalidConfig& e) {
    throw ScenarioError(std::string("invalid planner config: ") + e.what());
  }
  return cfg;
}

json config_to_json(const PlannerConfig& cfg) {
  return {{"n_iter", cfg.n_iter},
          {"rho", cfg.rho},
          {"step_max", cfg.step_max ? json(*cfg.step_max) : json(nullptr)},
          {"rewire_radius", cfg.rewire_radius},
          {"goal_tolerance", {{"position", cfg.goal_tolerance.position}, {"heading", cfg.goal_tolerance.heading}}},
          {"goal_bias", cfg.goal_bias},
          {"collision_resolution", cfg.collision_resolution},
          {"seed", cfg.seed},
          {"nearest_metric", cfg.nearest_metric == NearestMetric::Dubins ? "dubins" : "euclidean"},
          {"spatial_index", cfg.spatial_index},
          {"paper_strict_rewire", cfg.paper_strict_rewire},
          {"goal_facing_heading", cfg.goal_facing_heading}};
}

Scenario scenario_from_json(const json& doc) {
  require_object(doc, "scenario");
  reject_unknown(doc, {"bounds", "inflation_radius", "obstacles", "start", "goal", "planner"}, "scenario");
  Environment env = environment_from_json(doc);
  const Pose start = pose_from_json(field(doc, "start", "scenario"), "start");
  const Pose goal = pose_from_json(field(doc, "goal", "scenario"), "goal");
  PlannerConfig cfg = doc.contains("planner") ? config_from_json(doc["planner"]) : PlannerConfig::for_radius(1.0);
  return Scenario{std::move(env), start, goal, cfg};
}

json scenario_to_json(const Scenario& s) {
  json doc = environment_to_json(s.env);
  doc["start"] = pose_to_json(s.start);
  doc["goal"] = pose_to_json(s.goal);
  doc["planner"] = config_to_json(s.config);
  return doc;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ScenarioError(path.string() + ": " + e.what());
  }
}

void write_json_file(const json& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ScenarioError("cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

Scenario load_scenario(const std::filesystem::path& path) {
  try {
    return scenario_from_json(read_json_file(path));
  } catch (const json::exception& e) {
    throw ScenarioError(path.string() + ": " + e.what());
  }
}

void save_scenario(const Scenario& s, const std::filesystem::path& path) { write_json_file(scenario_to_json(s), path); }

}  // namespace dubins_rrt
