#include "dubins_rrt/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "dubins_rrt/bench.hpp"
#include "dubins_rrt/errors.hpp"
#include "dubins_rrt/result_io.hpp"
#include "dubins_rrt/scenario.hpp"
#include "dubins_rrt/svg.hpp"

namespace dubins_rrt {

namespace {

namespace fs = std::filesystem;

struct GlobalFlags {
  std::optional<std::uint64_t> seed;
  std::string out_dir = "out";
  std::optional<double> resolution;
  bool degrees = false;
};

struct DubinsArgs {
  std::vector<double> start;
  std::vector<double> goal;
  double rho = 1.0;
  std::size_t samples = 0;
  std::string csv;
};

struct PlanArgs {
  std::string scenario;
  std::string algorithm = "rrt-star";
  std::optional<long long> n_iter;
  std::optional<double> step_max;
  bool no_step_limit = false;
  std::optional<double> rewire_radius;
  std::optional<double> goal_bias;
  bool linear_nearest = false;
  bool euclidean_nearest = false;
  bool paper_strict_rewire = false;
};

struct BenchArgs {
  std::string spec;
  std::optional<unsigned> threads;
};

struct RenderArgs {
  std::string result;
  std::string output;
};

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ScenarioError("cannot create output directory " + dir.string() + ": " + ec.message());
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ScenarioError("cannot write " + path.string());
  out << text;
}

int cmd_dubins(const DubinsArgs& a, const GlobalFlags& g, std::ostream& out) {
  const double unit = g.degrees ? kPi / 180.0 : 1.0;
  for (const double v : a.start) {
    if (!std::isfinite(v)) throw InvalidConfig("start pose must be finite");
  }
  for (const double v : a.goal) {
    if (!std::isfinite(v)) throw InvalidConfig("goal pose must be finite");
  }
  if (!(a.rho > 0.0) || !std::isfinite(a.rho)) throw InvalidConfig("rho must be positive");
  const Pose start(a.start[0], a.start[1], a.start[2] * unit);
  const Pose goal(a.goal[0], a.goal[1], a.goal[2] * unit);

  const auto candidates = evaluate_words(start, goal, a.rho);
  const DubinsPath best = shortest_path(start, goal, a.rho);
  char line[160];
  std::snprintf(line, sizeof line, "%-4s %-9s %12s %12s %12s %12s\n", "word", "feasible", "t", "p", "q", "length");
  out << line;
  for (const auto& c : candidates) {
    const bool usable = c.params && c.reconstructs;
    if (usable) {
      std::snprintf(line, sizeof line, "%-4s %-9s %12.6f %12.6f %12.6f %12.6f%s\n", std::string(to_string(c.word)).c_str(),
                    "yes", c.params->t, c.params->p, c.params->q, c.length,
                    c.word == best.word() && best.length() > 0.0 ? "  *" : "");
    } else {
      std::snprintf(line, sizeof line, "%-4s %-9s %12s %12s %12s %12s\n", std::string(to_string(c.word)).c_str(), "no",
                    "-", "-", "-", "-");
    }
    out << line;
  }
  out << "winner " << to_string(best.word()) << " length " << fixed6(best.length()) << '\n';

  if (!a.csv.empty()) {
    std::vector<PathSample> rows;
    const std::size_t n = std::max<std::size_t>(a.samples, 1);
    for (std::size_t k = 0; k <= n; ++k) {
      const double s = k == n ? best.length() : best.length() * static_cast<double>(k) / static_cast<double>(n);
      rows.push_back({s, from_canonical(best, s)});
    }
    std::ofstream csv(a.csv);
    if (!csv) throw ScenarioError("cannot write " + a.csv);
    write_pose_csv(csv, rows);
  }
  return kExitOk;
}

PlannerConfig apply_overrides(PlannerConfig cfg, const PlanArgs& a, const GlobalFlags& g) {
  if (a.n_iter) {
    if (*a.n_iter < 1) throw InvalidConfig("n_iter must be at least 1");
    cfg.n_iter = static_cast<std::size_t>(*a.n_iter);
  }
  if (a.step_max) cfg.step_max = *a.step_max;
  if (a.no_step_limit) cfg.step_max.reset();
  if (a.rewire_radius) cfg.rewire_radius = *a.rewire_radius;
  if (a.goal_bias) cfg.goal_bias = *a.goal_bias;
  if (a.linear_nearest) cfg.spatial_index = false;
  if (a.euclidean_nearest) cfg.nearest_metric = NearestMetric::Euclidean;
  if (a.paper_strict_rewire) cfg.paper_strict_rewire = true;
  if (g.seed) cfg.seed = *g.seed;
  if (g.resolution) cfg.collision_resolution = *g.resolution;
  cfg.validate();
  return cfg;
}

void write_plan_artifacts(const SavedPlan& saved, const fs::path& dir) {
  ensure_dir(dir);
  const PlanResult& r = saved.result;
  {
    std::ofstream csv(dir / "solution.csv");
    if (!csv) throw ScenarioError("cannot write " + (dir / "solution.csv").string());
    write_pose_csv(csv, r.solution ? std::span<const PathSample>(r.solution->samples) : std::span<const PathSample>());
  }
  write_json_file(stats_to_json(saved), dir / "stats.json");
  write_json_file(plan_to_json(saved), dir / "result.json");
  write_text(dir / "plan.svg", render_svg(saved.scenario.env, saved.scenario.start, saved.scenario.goal, r.tree,
                                          r.solution));
}

int cmd_plan(const PlanArgs& a, const GlobalFlags& g, std::ostream& out) {
  Scenario scenario = load_scenario(a.scenario);
  const auto algorithm = algorithm_from_string(a.algorithm);
  if (!algorithm) throw InvalidConfig("unknown algorithm '" + a.algorithm + "' (expected rrt or rrt-star)");
  scenario.config = apply_overrides(scenario.config, a, g);

  const auto t0 = std::chrono::steady_clock::now();
  PlanResult result = plan(*algorithm, scenario.env, scenario.start, scenario.goal, scenario.config);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const bool solved = result.solution.has_value();
  SavedPlan saved{std::move(scenario), *algorithm, std::move(result), wall};
  write_plan_artifacts(saved, g.out_dir);

  out << "algorithm " << to_string(saved.algorithm) << "  seed " << saved.scenario.config.seed << "  iterations "
      << saved.result.iterations_used << '\n';
  out << "nodes " << saved.result.tree.size() << "  rewires " << saved.result.stats.rewires << "  collision checks "
      << saved.result.stats.collision_checks << '\n';
  if (solved) {
    out << "solved length " << fixed6(saved.result.solution->total_length) << '\n';
  } else {
    out << "no solution within " << saved.result.iterations_used << " iterations\n";
  }
  out << "artifacts written to " << g.out_dir << '\n';
  return solved ? kExitOk : kExitNoSolution;
}

int cmd_bench(const BenchArgs& a, const GlobalFlags& g, bool out_dir_given, std::ostream& out) {
  BenchSpec spec = load_bench_spec(a.spec);
  if (out_dir_given) spec.output = g.out_dir;
  if (a.threads) spec.threads = *a.threads;
  Scenario scenario = load_scenario(spec.scenario);
  if (g.resolution) scenario.config.collision_resolution = *g.resolution;

  const auto records = run_bench(spec, scenario);
  const auto rows = summarize(records);
  ensure_dir(spec.output);
  {
    std::ofstream f(spec.output / "records.csv", std::ios::binary);
    write_records_csv(f, records);
  }
  {
    std::ofstream f(spec.output / "timings.csv", std::ios::binary);
    write_timings_csv(f, records);
  }
  {
    std::ofstream f(spec.output / "summary.csv", std::ios::binary);
    write_summary_csv(f, rows);
  }
  const std::string text = format_summary(rows);
  write_text(spec.output / "summary.txt", text);
  out << text;
  for (const auto& r : records) {
    if (!r.error.empty()) {
      out << "error: " << to_string(r.algorithm) << " budget " << r.budget << " seed " << r.seed << ": " << r.error << '\n';
    }
  }
  return kExitOk;
}

int cmd_render(const RenderArgs& a, const GlobalFlags& g, std::ostream& out) {
  const SavedPlan saved = load_plan(a.result);
  const fs::path target = a.output.empty() ? fs::path(g.out_dir) / "plan.svg" : fs::path(a.output);
  if (target.has_parent_path()) ensure_dir(target.parent_path());
  write_text(target, render_svg(saved.scenario.env, saved.scenario.start, saved.scenario.goal, saved.result.tree,
                                saved.result.solution));
  out << "wrote " << target.string() << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dubins-car RRT / RRT* planning toolkit", "dubins_rrt"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--seed", g.seed, "RNG seed override");
  auto* out_dir_opt = app.add_option("--out-dir", g.out_dir, "Directory for generated artifacts");
  app.add_option("--resolution", g.resolution, "Collision sampling resolution (world units)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--degrees", g.degrees, "Read pose angles in degrees");

  DubinsArgs da;
  auto* dubins = app.add_subcommand("dubins", "Shortest Dubins path between two poses");
  dubins->add_option("--start", da.start, "x y theta")->expected(3)->required();
  dubins->add_option("--goal", da.goal, "x y theta")->expected(3)->required();
  dubins->add_option("--rho", da.rho, "Turning radius");
  dubins->add_option("--samples", da.samples, "Intervals for the CSV trajectory");
  dubins->add_option("--csv", da.csv, "Write sampled s,x,y,theta rows here");

  PlanArgs pa;
  auto* plan_cmd = app.add_subcommand("plan", "Plan a scenario with RRT or RRT*");
  plan_cmd->add_option("scenario", pa.scenario, "Scenario JSON file")->required();
  plan_cmd->add_option("--algorithm,-a", pa.algorithm, "rrt or rrt-star");
  plan_cmd->add_option("--n-iter", pa.n_iter, "Sampling iterations");
  plan_cmd->add_option("--step-max", pa.step_max, "Steering cap per extension");
  plan_cmd->add_flag("--no-step-limit", pa.no_step_limit, "Steer all the way to each sample");
  plan_cmd->add_option("--rewire-radius", pa.rewire_radius, "RRT* neighbourhood radius (Dubins length)");
  plan_cmd->add_option("--goal-bias", pa.goal_bias, "Probability of sampling the goal");
  plan_cmd->add_flag("--linear-nearest", pa.linear_nearest, "Disable the spatial index");
  plan_cmd->add_flag("--euclidean-nearest", pa.euclidean_nearest, "Nearest node by Euclidean distance");
  plan_cmd->add_flag("--paper-strict-rewire", pa.paper_strict_rewire, "RRT*: rewire only, no choose-parent");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Run a seeded RRT / RRT* sweep");
  bench->add_option("spec", ba.spec, "Bench spec JSON file")->required();
  bench->add_option("--threads", ba.threads, "Worker threads (0 = all cores)");

  RenderArgs ra;
  auto* render = app.add_subcommand("render", "Re-render the SVG of a saved result.json");
  render->add_option("result", ra.result, "result.json written by plan")->required();
  render->add_option("--output,-o", ra.output, "SVG path (default <out-dir>/plan.svg)");

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed_args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (dubins->parsed()) return cmd_dubins(da, g, out);
    if (plan_cmd->parsed()) return cmd_plan(pa, g, out);
    if (bench->parsed()) return cmd_bench(ba, g, out_dir_opt->count() > 0, out);
    if (render->parsed()) return cmd_render(ra, g, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace dubins_rrt
