#include "dubins_rrt/result_io.hpp"

#include <cstdio>

#include "dubins_rrt/errors.hpp"

namespace dubins_rrt {

namespace {

using nlohmann::json;

json edge_to_json(const DubinsPath& e) {
  return {{"word", std::string(to_string(e.word()))},
          {"t", e.params().t},
          {"p", e.params().p},
          {"q", e.params().q},
          {"rho", e.rho()}};
}

DubinsPath edge_from_json(const json& doc, const Pose& start) {
  const auto word = word_from_string(doc.at("word").get<std::string>());
  if (!word) throw ScenarioError("unknown Dubins word in saved plan");
  const WordParams params{doc.at("t").get<double>(), doc.at("p").get<double>(), doc.at("q").get<double>()};
  return DubinsPath(start, *word, params, doc.at("rho").get<double>());
}

}  // namespace

json plan_to_json(const SavedPlan& plan) {
  const PlanResult& r = plan.result;
  json tree = json::array();
  for (const auto& n : r.tree) {
    json node = {{"id", n.id}, {"pose", pose_to_json(n.pose)}, {"cost", n.cost}};
    node["parent"] = n.parent ? json(*n.parent) : json(nullptr);
    node["edge"] = n.edge ? edge_to_json(*n.edge) : json(nullptr);
    tree.push_back(std::move(node));
  }
  json solution = nullptr;
  if (r.solution) solution = {{"nodes", r.solution->nodes}, {"total_length", r.solution->total_length}};
  return {{"scenario", scenario_to_json(plan.scenario)},
          {"algorithm", std::string(to_string(plan.algorithm))},
          {"iterations_used", r.iterations_used},
          {"stats",
           {{"nodes_added", r.stats.nodes_added},
            {"rewires", r.stats.rewires},
            {"collision_checks", r.stats.collision_checks}}},
          {"wall_time", plan.wall_time},
          {"tree", std::move(tree)},
          {"solution", std::move(solution)}};
}

SavedPlan plan_from_json(const json& doc) {
  try {
    Scenario scenario = scenario_from_json(doc.at("scenario"));
    const auto algorithm = algorithm_from_string(doc.at("algorithm").get<std::string>());
    if (!algorithm) throw ScenarioError("unknown algorithm in saved plan");

    PlanResult r;
    r.iterations_used = doc.at("iterations_used").get<std::size_t>();
    const json& st = doc.at("stats");
    r.stats = {st.at("nodes_added").get<std::size_t>(), st.at("rewires").get<std::size_t>(),
               st.at("collision_checks").get<std::size_t>()};
    for (const auto& n : doc.at("tree")) {
      TreeNode node;
      node.id = n.at("id").get<std::size_t>();
      node.pose = pose_from_json(n.at("pose"), "pose");
      node.cost = n.at("cost").get<double>();
      if (!n.at("parent").is_null()) {
        node.parent = n.at("parent").get<std::size_t>();
        if (*node.parent >= doc.at("tree").size()) {
          throw ScenarioError("saved plan has a dangling parent index");
        }
        node.edge = edge_from_json(n.at("edge"), pose_from_json(doc.at("tree").at(*node.parent).at("pose"), "pose"));
      }
      r.tree.push_back(std::move(node));
    }
    if (!doc.at("solution").is_null()) {
      const auto ids = doc.at("solution").at("nodes").get<std::vector<std::size_t>>();
      if (ids.empty() || ids.back() >= r.tree.size()) throw ScenarioError("saved plan has an invalid solution");
      const std::size_t goal_id = ids.back();
      r.solution = extract_solution(r.tree, std::span<const std::size_t>(&goal_id, 1), scenario.config.collision_resolution);
    }
    return SavedPlan{std::move(scenario), *algorithm, std::move(r), doc.value("wall_time", 0.0)};
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("malformed saved plan: ") + e.what());
  }
}

SavedPlan load_plan(const std::filesystem::path& path) { return plan_from_json(read_json_file(path)); }

void write_pose_csv(std::ostream& out, std::span<const PathSample> samples) {
  out << "s,x,y,theta\n";
  char buf[128];
  for (const auto& s : samples) {
    std::snprintf(buf, sizeof buf, "%.9g,%.9g,%.9g,%.9g\n", s.s, s.pose.x(), s.pose.y(), s.pose.theta());
    out << buf;
  }
}

json stats_to_json(const SavedPlan& plan) {
  const PlanResult& r = plan.result;
  return {{"algorithm", std::string(to_string(plan.algorithm))},
          {"solved", r.solution.has_value()},
          {"length", r.solution ? json(r.solution->total_length) : json(nullptr)},
          {"nodes", r.tree.size()},
          {"nodes_added", r.stats.nodes_added},
          {"rewires", r.stats.rewires},
          {"collision_checks", r.stats.collision_checks},
          {"iterations", r.iterations_used},
          {"seed", plan.scenario.config.seed},
          {"wall_time", plan.wall_time}};
}

}  // namespace dubins_rrt
