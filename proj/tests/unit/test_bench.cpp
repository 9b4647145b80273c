#include "dubins_rrt/bench.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "dubins_rrt/errors.hpp"

namespace dubins_rrt {
namespace {

using nlohmann::json;

const std::string kScenarioDir = DUBINS_RRT_SCENARIO_DIR;

BenchRecord solved(Algorithm a, std::size_t budget, std::uint64_t seed, double length) {
  BenchRecord r;
  r.algorithm = a;
  r.budget = budget;
  r.seed = seed;
  r.solved = true;
  r.path_length = length;
  r.wall_time = 0.01 * static_cast<double>(seed);
  return r;
}

BenchRecord unsolved(Algorithm a, std::size_t budget, std::uint64_t seed) {
  BenchRecord r;
  r.algorithm = a;
  r.budget = budget;
  r.seed = seed;
  return r;
}

BenchSpec small_spec() {
  BenchSpec spec;
  spec.scenario = kScenarioDir + "/maze.json";
  spec.algorithms = {Algorithm::Rrt, Algorithm::RrtStar};
  spec.sample_budgets = {250};
  spec.seeds = {1, 2};
  spec.audit = true;
  spec.threads = 1;
  return spec;
}

std::string records_text(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  write_records_csv(out, records);
  return out.str();
}

TEST(BenchSpec, ValidationRejectsEmptyLists) {
  BenchSpec spec = small_spec();
  EXPECT_NO_THROW(spec.validate());
  spec.seeds.clear();
  EXPECT_THROW(spec.validate(), ScenarioError);
  spec = small_spec();
  spec.sample_budgets.clear();
  EXPECT_THROW(spec.validate(), ScenarioError);
  spec = small_spec();
  spec.sample_budgets = {0};
  EXPECT_THROW(spec.validate(), ScenarioError);
  spec = small_spec();
  spec.algorithms.clear();
  EXPECT_THROW(spec.validate(), ScenarioError);
}

TEST(BenchSpec, JsonResolvesScenarioAgainstBaseDir) {
  const json doc = json::parse(R"({"scenario": "maze.json", "algorithms": ["rrt", "rrt-star"],
                                   "sample_budgets": [500, 1000], "seeds": [1, 2, 3], "audit": true})");
  const BenchSpec spec = bench_spec_from_json(doc, kScenarioDir);
  EXPECT_EQ(spec.scenario, std::filesystem::path(kScenarioDir) / "maze.json");
  EXPECT_EQ(spec.algorithms.size(), 2u);
  EXPECT_EQ(spec.sample_budgets, (std::vector<std::size_t>{500, 1000}));
  EXPECT_EQ(spec.seeds.size(), 3u);
  EXPECT_TRUE(spec.audit);

  EXPECT_THROW(bench_spec_from_json(json::parse(R"({"scenario": "m.json", "algorithms": ["rrt"],
                                                    "sample_budgets": [1], "seeds": []})"),
                                    kScenarioDir),
               ScenarioError);
  EXPECT_THROW(bench_spec_from_json(json::parse(R"({"scenario": "m.json", "algorithms": ["prm"],
                                                    "sample_budgets": [1], "seeds": [1]})"),
                                    kScenarioDir),
               ScenarioError);
  EXPECT_THROW(bench_spec_from_json(json::parse(R"({"scenario": "m.json", "algorithms": ["rrt"],
                                                    "sample_budgets": [1], "seeds": [1], "colour": 1})"),
                                    kScenarioDir),
               ScenarioError);
}

TEST(Summarize, NoSolvedRecords) {
  const auto rows = summarize({unsolved(Algorithm::Rrt, 500, 1), unsolved(Algorithm::Rrt, 500, 2)});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].runs, 2u);
  EXPECT_EQ(rows[0].solve_rate, 0.0);
  EXPECT_FALSE(rows[0].mean_length.has_value());
  EXPECT_FALSE(rows[0].min_length.has_value());
  EXPECT_FALSE(rows[0].median_length.has_value());
}

TEST(Summarize, SingleRecord) {
  const auto rows = summarize({solved(Algorithm::RrtStar, 500, 1, 22.54)});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].mean_length, 22.54);
  EXPECT_EQ(rows[0].min_length, 22.54);
  EXPECT_EQ(rows[0].median_length, 22.54);
  EXPECT_EQ(rows[0].solve_rate, 1.0);
}

TEST(Summarize, GroupsAndMedian) {
  const auto rows = summarize({solved(Algorithm::RrtStar, 3000, 1, 20.0), solved(Algorithm::Rrt, 500, 1, 25.0),
                               solved(Algorithm::RrtStar, 3000, 2, 22.0), unsolved(Algorithm::RrtStar, 3000, 3),
                               solved(Algorithm::RrtStar, 3000, 4, 21.0), solved(Algorithm::RrtStar, 3000, 5, 19.0)});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].algorithm, Algorithm::Rrt);
  EXPECT_EQ(rows[1].budget, 3000u);
  EXPECT_EQ(rows[1].runs, 5u);
  EXPECT_EQ(rows[1].solved, 4u);
  EXPECT_DOUBLE_EQ(rows[1].solve_rate, 0.8);
  EXPECT_DOUBLE_EQ(*rows[1].mean_length, 20.5);
  EXPECT_DOUBLE_EQ(*rows[1].median_length, 20.5);
  EXPECT_EQ(*rows[1].min_length, 19.0);
  EXPECT_EQ(*rows[1].max_length, 22.0);
}

TEST(SummarizeProperties, PermutationInvariantAndMeanBounded) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> len(18.0, 30.0);
  std::vector<BenchRecord> records;
  for (const auto a : {Algorithm::Rrt, Algorithm::RrtStar}) {
    for (const std::size_t b : {500u, 1000u}) {
      for (std::uint64_t s = 1; s <= 25; ++s) {
        records.push_back(s % 7 == 0 ? unsolved(a, b, s) : solved(a, b, s, len(rng) + 1e-13 * static_cast<double>(s)));
      }
    }
  }
  std::ostringstream reference;
  write_summary_csv(reference, summarize(records));
  for (int k = 0; k < 20; ++k) {
    std::shuffle(records.begin(), records.end(), rng);
    std::ostringstream out;
    write_summary_csv(out, summarize(records));
    ASSERT_EQ(out.str(), reference.str());
  }
  for (const auto& row : summarize(records)) {
    ASSERT_TRUE(row.mean_length);
    EXPECT_GE(*row.mean_length, *row.min_length);
    EXPECT_LE(*row.mean_length, *row.max_length);
  }
}

TEST(RunBench, OneRecordPerCellSortedAndAudited) {
  const BenchSpec spec = small_spec();
  const auto records = run_bench(spec);
  ASSERT_EQ(records.size(), 4u);
  EXPECT_EQ(records[0].algorithm, Algorithm::Rrt);
  EXPECT_EQ(records[0].seed, 1u);
  EXPECT_EQ(records[1].seed, 2u);
  EXPECT_EQ(records[2].algorithm, Algorithm::RrtStar);
  for (const auto& r : records) {
    EXPECT_EQ(r.solved, r.path_length.has_value());
    EXPECT_EQ(r.audit, AuditVerdict::Passed);
    EXPECT_TRUE(r.trace_nonincreasing);
    EXPECT_TRUE(r.error.empty());
  }
  for (std::size_t i = 0; i < 2; ++i) {
    if (records[i].solved && records[i + 2].solved) EXPECT_LE(*records[i + 2].path_length, *records[i].path_length);
  }
}

TEST(RunBench, ThreadCountDoesNotChangeRecords) {
  BenchSpec spec = small_spec();
  spec.seeds = {3, 1, 2};
  const std::string serial = records_text(run_bench(spec));
  spec.threads = 3;
  EXPECT_EQ(records_text(run_bench(spec)), serial);
  EXPECT_EQ(serial.substr(0, serial.find('\n')),
            "algorithm,budget,seed,solved,path_length,nodes,rewires,audit,trace_nonincreasing,error");
}

TEST(RunBench, PlannerErrorsAreCapturedPerRecord) {
  Scenario s = load_scenario(kScenarioDir + "/maze.json");
  s.start = Pose(5, 3, 0);  // inside a wall
  BenchSpec spec = small_spec();
  spec.seeds = {1};
  const auto records = run_bench(spec, s);
  ASSERT_EQ(records.size(), 2u);
  for (const auto& r : records) {
    EXPECT_FALSE(r.solved);
    EXPECT_FALSE(r.error.empty());
  }
}

TEST(RunBench, MissingScenarioThrows) {
  BenchSpec spec = small_spec();
  spec.scenario = kScenarioDir + "/nope.json";
  EXPECT_THROW(run_bench(spec), ScenarioError);
}

}  // namespace
}  // namespace dubins_rrt
