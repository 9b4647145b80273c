#include "dubins_rrt/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "dubins_rrt/result_io.hpp"
#include "dubins_rrt/scenario.hpp"

namespace dubins_rrt {
namespace {

namespace fs = std::filesystem;

const std::string kScenarioDir = DUBINS_RRT_SCENARIO_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("dubins_rrt_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
};

TEST_F(CliTest, DubinsWinnerLengths) {
  auto r = cli({"dubins", "--start", "0", "0", "0", "--goal", "10", "0", "0", "--rho", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("winner LSL length 10.000000"), std::string::npos) << r.out;

  r = cli({"dubins", "--start", "0", "0", "0", "--goal", "0", "4", "0"});
  EXPECT_NE(r.out.find("length 6.283185"), std::string::npos) << r.out;

  r = cli({"dubins", "--start", "0", "0", "0", "--goal", "1", "1", "1.5707963267948966"});
  EXPECT_NE(r.out.find("winner LSL length 1.570796"), std::string::npos) << r.out;

  r = cli({"--degrees", "dubins", "--start", "0", "0", "0", "--goal", "1", "1", "90"});
  EXPECT_NE(r.out.find("length 1.570796"), std::string::npos) << r.out;

  for (const char* word : {"LSL", "RSR", "LSR", "RSL", "RLR", "LRL"}) EXPECT_NE(r.out.find(word), std::string::npos);
}

TEST_F(CliTest, DubinsNegativeAnglesAndCsv) {
  const fs::path csv = dir_ / "path.csv";
  const auto r = cli({"dubins", "--start", "0", "0", "-1.5707963267948966", "--goal", "3", "-2", "0", "--samples", "10",
                      "--csv", csv.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::string text = slurp(csv);
  EXPECT_EQ(text.rfind("s,x,y,theta\n", 0), 0u);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 12);
}

TEST_F(CliTest, DubinsRejectsBadInput) {
  EXPECT_EQ(cli({"dubins", "--start", "0", "0", "x", "--goal", "1", "0", "0"}).code, kExitInputError);
  EXPECT_EQ(cli({"dubins", "--start", "0", "0", "0", "--goal", "1", "0", "0", "--rho", "0"}).code, kExitInputError);
  EXPECT_EQ(cli({"dubins", "--start", "0", "0", "0"}).code, kExitInputError);
  EXPECT_EQ(cli({"dubins", "--start", "0", "0", "0", "--goal", "0", "0", "1"}).code, kExitOk);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitInputError);
  EXPECT_EQ(cli({}).code, kExitInputError);
  EXPECT_EQ(cli({"--help"}).code, kExitOk);
}

TEST_F(CliTest, PlanMazeWritesArtifacts) {
  const auto r = cli({"--seed", "1", "--out-dir", dir_.string(), "plan", kScenarioDir + "/maze.json", "-a", "rrt",
                      "--n-iter", "500"});
  ASSERT_EQ(r.code, kExitOk) << r.out << r.err;
  for (const char* f : {"solution.csv", "stats.json", "result.json", "plan.svg"}) EXPECT_TRUE(fs::exists(dir_ / f)) << f;

  const SavedPlan saved = load_plan(dir_ / "result.json");
  const std::string svg = slurp(dir_ / "plan.svg");
  std::size_t edges = 0;
  for (auto pos = svg.find("class=\"edge\""); pos != std::string::npos; pos = svg.find("class=\"edge\"", pos + 1)) ++edges;
  EXPECT_EQ(edges, saved.result.tree.size() - 1);

  const auto stats = nlohmann::json::parse(slurp(dir_ / "stats.json"));
  EXPECT_TRUE(stats.at("solved").get<bool>());
  EXPECT_EQ(stats.at("seed").get<int>(), 1);

  // Every CSV row replays collision-free against the scenario.
  const Scenario s = load_scenario(kScenarioDir + "/maze.json");
  std::istringstream rows(slurp(dir_ / "solution.csv"));
  std::string line;
  std::getline(rows, line);
  std::size_t count = 0;
  double last_s = -1.0;
  while (std::getline(rows, line)) {
    double sv, x, y, th;
    ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &sv, &x, &y, &th), 4) << line;
    EXPECT_FALSE(s.env.point_in_collision({x, y})) << line;
    EXPECT_GE(sv, last_s);
    last_s = sv;
    ++count;
  }
  EXPECT_GT(count, 10u);
}

TEST_F(CliTest, PlanIsDeterministic) {
  const fs::path a = dir_ / "a", b = dir_ / "b";
  ASSERT_EQ(cli({"--out-dir", a.string(), "plan", kScenarioDir + "/block.json", "--n-iter", "300"}).code, kExitOk);
  ASSERT_EQ(cli({"--out-dir", b.string(), "plan", kScenarioDir + "/block.json", "--n-iter", "300"}).code, kExitOk);
  EXPECT_EQ(slurp(a / "solution.csv"), slurp(b / "solution.csv"));
  EXPECT_EQ(slurp(a / "plan.svg"), slurp(b / "plan.svg"));
}

TEST_F(CliTest, PlanInputErrors) {
  auto doc = read_json_file(kScenarioDir + "/maze.json");
  doc["start"] = {{"x", 5.0}, {"y", 3.0}, {"theta", 0.0}};
  const fs::path bad = dir_ / "bad.json";
  write_json_file(doc, bad);
  auto r = cli({"--out-dir", dir_.string(), "plan", bad.string()});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("start pose (5"), std::string::npos) << r.err;

  r = cli({"--out-dir", dir_.string(), "plan", kScenarioDir + "/maze.json", "--n-iter", "0"});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_EQ(cli({"plan", (dir_ / "missing.json").string()}).code, kExitInputError);
  EXPECT_EQ(cli({"plan", kScenarioDir + "/maze.json", "-a", "prm"}).code, kExitInputError);
}

TEST_F(CliTest, PlanWithoutSolutionExitsThree) {
  const auto r = cli({"--out-dir", dir_.string(), "plan", kScenarioDir + "/maze.json", "--n-iter", "1", "--goal-bias", "0"});
  EXPECT_EQ(r.code, kExitNoSolution) << r.out << r.err;
  EXPECT_TRUE(fs::exists(dir_ / "plan.svg"));
}

TEST_F(CliTest, RenderReproducesPlanSvg) {
  ASSERT_EQ(cli({"--out-dir", dir_.string(), "plan", kScenarioDir + "/forest.json", "--n-iter", "300"}).code, kExitOk);
  const fs::path again = dir_ / "again.svg";
  ASSERT_EQ(cli({"render", (dir_ / "result.json").string(), "-o", again.string()}).code, kExitOk);
  EXPECT_EQ(slurp(again), slurp(dir_ / "plan.svg"));
}

TEST_F(CliTest, BenchSingleCellAndRerun) {
  const nlohmann::json spec = {{"scenario", kScenarioDir + "/block.json"},
                               {"algorithms", {"rrt-star"}},
                               {"sample_budgets", {200}},
                               {"seeds", {5}},
                               {"audit", true}};
  const fs::path spec_path = dir_ / "spec.json";
  write_json_file(spec, spec_path);
  const fs::path a = dir_ / "a", b = dir_ / "b";
  ASSERT_EQ(cli({"--out-dir", a.string(), "bench", spec_path.string()}).code, kExitOk);
  ASSERT_EQ(cli({"--out-dir", b.string(), "bench", spec_path.string(), "--threads", "2"}).code, kExitOk);
  const std::string records = slurp(a / "records.csv");
  EXPECT_EQ(std::count(records.begin(), records.end(), '\n'), 2);
  EXPECT_EQ(records, slurp(b / "records.csv"));
  for (const char* f : {"timings.csv", "summary.csv", "summary.txt"}) EXPECT_TRUE(fs::exists(a / f)) << f;
}

}  // namespace
}  // namespace dubins_rrt
