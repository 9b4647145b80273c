#include "dubins_rrt/scenario.hpp"

#include <filesystem>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "dubins_rrt/errors.hpp"
#include "dubins_rrt/result_io.hpp"
#include "dubins_rrt/svg.hpp"

namespace dubins_rrt {
namespace {

using nlohmann::json;

const std::string kScenarioDir = DUBINS_RRT_SCENARIO_DIR;

json minimal_doc() {
  return json::parse(R"({
    "bounds": {"xmin": 0, "ymin": 0, "xmax": 10, "ymax": 10},
    "inflation_radius": 0.5,
    "obstacles": [[[4, 4], [6, 4], [6, 6], [4, 6]]],
    "start": {"x": 1, "y": 1, "theta": 0},
    "goal": {"x": 9, "y": 9, "theta": 1.5707963267948966}
  })");
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("dubins_rrt_test_" + name);
}

TEST(Scenario, MinimalDocumentUsesRadiusDefaults) {
  const Scenario s = scenario_from_json(minimal_doc());
  EXPECT_EQ(s.env.obstacles().size(), 1u);
  EXPECT_EQ(s.env.inflation_radius(), 0.5);
  EXPECT_EQ(s.start, Pose(1, 1, 0));
  EXPECT_EQ(s.config.rho, 1.0);
  EXPECT_EQ(s.config.step_max, 5.0);
  EXPECT_EQ(s.config.collision_resolution, 0.05);
}

TEST(Scenario, PlannerFieldsOverride) {
  json doc = minimal_doc();
  doc["planner"] = json::parse(R"({"rho": 2, "n_iter": 42, "step_max": null, "seed": 9,
                                   "goal_tolerance": {"position": 0.1}, "nearest_metric": "euclidean",
                                   "paper_strict_rewire": true})");
  const Scenario s = scenario_from_json(doc);
  EXPECT_EQ(s.config.rho, 2.0);
  EXPECT_EQ(s.config.rewire_radius, 10.0);
  EXPECT_EQ(s.config.n_iter, 42u);
  EXPECT_FALSE(s.config.step_max.has_value());
  EXPECT_EQ(s.config.seed, 9u);
  EXPECT_EQ(s.config.goal_tolerance.position, 0.1);
  EXPECT_EQ(s.config.goal_tolerance.heading, 1e-6);
  EXPECT_EQ(s.config.nearest_metric, NearestMetric::Euclidean);
  EXPECT_TRUE(s.config.paper_strict_rewire);
}

TEST(Scenario, UnknownKeysRejectedAtEveryLevel) {
  for (const char* pointer : {"/extra", "/bounds/zmin", "/start/phi", "/planner/turbo", "/planner/goal_tolerance/x"}) {
    json doc = minimal_doc();
    doc["planner"] = json::object({{"goal_tolerance", json::object()}});
    doc[json::json_pointer(pointer)] = 1;
    EXPECT_THROW(scenario_from_json(doc), ScenarioError) << pointer;
  }
}

TEST(Scenario, InvalidContentRejected) {
  json doc = minimal_doc();
  doc.erase("goal");
  EXPECT_THROW(scenario_from_json(doc), ScenarioError);

  doc = minimal_doc();
  doc["obstacles"][0] = json::parse("[[0, 0], [1, 1], [1, 0], [0, 1]]");
  EXPECT_THROW(scenario_from_json(doc), ScenarioError);

  doc = minimal_doc();
  doc["obstacles"][0] = json::parse("[[8, 8], [12, 8], [12, 9]]");
  EXPECT_THROW(scenario_from_json(doc), ScenarioError);

  doc = minimal_doc();
  doc["planner"] = json::parse(R"({"n_iter": 0})");
  EXPECT_THROW(scenario_from_json(doc), ScenarioError);

  doc = minimal_doc();
  doc["start"]["x"] = "one";
  EXPECT_THROW(scenario_from_json(doc), ScenarioError);

  EXPECT_THROW(load_scenario(temp_path("does_not_exist.json")), ScenarioError);
}

TEST(Scenario, FileRoundTripIsExact) {
  json doc = minimal_doc();
  doc["obstacles"][0] = json::parse("[[4.1, 4.000000000000001], [6.3, 4.7], [5.123456789012345, 6.9]]");
  doc["start"]["theta"] = 0.1 + 0.2;
  const Scenario s = scenario_from_json(doc);
  const auto path = temp_path("roundtrip.json");
  save_scenario(s, path);
  const Scenario back = load_scenario(path);
  std::filesystem::remove(path);
  EXPECT_EQ(scenario_to_json(back), scenario_to_json(s));
  EXPECT_EQ(back.env.obstacles()[0].vertices()[0].y, s.env.obstacles()[0].vertices()[0].y);
  EXPECT_EQ(back.start.theta(), s.start.theta());
}

TEST(Scenario, ShippedScenariosLoad) {
  for (const char* name : {"block.json", "maze.json", "forest.json"}) {
    const Scenario s = load_scenario(kScenarioDir + "/" + name);
    EXPECT_FALSE(s.env.pose_in_collision(s.start)) << name;
    EXPECT_FALSE(s.env.pose_in_collision(s.goal)) << name;
    EXPECT_EQ(s.env.inflation_radius(), 0.5) << name;
    EXPECT_EQ(s.config.rho, 1.0) << name;
  }
}

SavedPlan small_plan() {
  Scenario s = load_scenario(kScenarioDir + "/block.json");
  s.config.n_iter = 300;
  PlanResult r = rrt_star_plan(s.env, s.start, s.goal, s.config);
  return SavedPlan{std::move(s), Algorithm::RrtStar, std::move(r), 0.5};
}

TEST(ResultIo, PlanRoundTrip) {
  const SavedPlan plan = small_plan();
  ASSERT_TRUE(plan.result.solution);
  const SavedPlan back = plan_from_json(json::parse(plan_to_json(plan).dump()));
  EXPECT_EQ(back.algorithm, plan.algorithm);
  ASSERT_EQ(back.result.tree.size(), plan.result.tree.size());
  for (std::size_t i = 0; i < plan.result.tree.size(); ++i) {
    EXPECT_EQ(back.result.tree[i].pose, plan.result.tree[i].pose);
    EXPECT_EQ(back.result.tree[i].parent, plan.result.tree[i].parent);
    EXPECT_EQ(back.result.tree[i].cost, plan.result.tree[i].cost);
  }
  ASSERT_TRUE(back.result.solution);
  EXPECT_EQ(back.result.solution->nodes, plan.result.solution->nodes);
  EXPECT_EQ(back.result.solution->total_length, plan.result.solution->total_length);
  EXPECT_EQ(back.result.solution->samples.size(), plan.result.solution->samples.size());
}

TEST(ResultIo, PoseCsvFormat) {
  const std::vector<PathSample> samples{{0.0, {1, 2, 0}}, {0.5, {1.5, 2, 1.0 / 3.0}}};
  std::ostringstream out;
  write_pose_csv(out, samples);
  EXPECT_EQ(out.str(), "s,x,y,theta\n0,1,2,0\n0.5,1.5,2,0.333333333\n");
}

TEST(Svg, StructureMatchesTree) {
  const SavedPlan plan = small_plan();
  const std::string svg = render_svg(plan.scenario.env, plan.scenario.start, plan.scenario.goal, plan.result.tree,
                                     plan.result.solution);
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1)) ++n;
    return n;
  };
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_EQ(count("class=\"edge\""), plan.result.tree.size() - 1);
  EXPECT_EQ(count("id=\"solution\""), 1u);
  EXPECT_EQ(count("<svg"), 1u);
  EXPECT_EQ(count("</svg>"), 1u);

  const std::string unsolved =
      render_svg(plan.scenario.env, plan.scenario.start, plan.scenario.goal, plan.result.tree, std::nullopt);
  EXPECT_EQ(unsolved.find("id=\"solution\""), std::string::npos);
}

}  // namespace
}  // namespace dubins_rrt
