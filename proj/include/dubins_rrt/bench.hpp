#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dubins_rrt/planner.hpp"
#include "dubins_rrt/scenario.hpp"

namespace dubins_rrt {

struct BenchSpec {
  std::filesystem::path scenario;
  std::vector<Algorithm> algorithms;
  std::vector<std::size_t> sample_budgets;
  std::vector<std::uint64_t> seeds;
  std::filesystem::path output = "bench_out";
  /// Run audit_result on every planner result and record the verdict.
  bool audit = false;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;

  /// Throws ScenarioError when algorithms, budgets or seeds are empty, or a budget is zero.
  void validate() const;
};

enum class AuditVerdict { Skipped, Passed, Failed };

struct BenchRecord {
  Algorithm algorithm = Algorithm::Rrt;
  std::size_t budget = 0;
  std::uint64_t seed = 0;
  bool solved = false;
  std::optional<double> path_length;  // present iff solved
  double wall_time = 0.0;             // seconds, planner call only
  std::size_t nodes = 0;
  std::size_t rewires = 0;
  AuditVerdict audit = AuditVerdict::Skipped;
  /// Best goal cost never increased from one iteration to the next.
  bool trace_nonincreasing = true;
  std::string error;  // planner failure message, empty on success
};

/// Parses a bench-spec document; a relative "scenario" path resolves against `base_dir`.
BenchSpec bench_spec_from_json(const nlohmann::json& doc, const std::filesystem::path& base_dir);
BenchSpec load_bench_spec(const std::filesystem::path& path);

/// One record per (algorithm, budget, seed), sorted in that order. Planner
/// errors are captured per record; scenario errors throw ScenarioError.
std::vector<BenchRecord> run_bench(const BenchSpec& spec);
std::vector<BenchRecord> run_bench(const BenchSpec& spec, const Scenario& scenario);

struct SummaryRow {
  Algorithm algorithm = Algorithm::Rrt;
  std::size_t budget = 0;
  std::size_t runs = 0;
  std::size_t solved = 0;
  double solve_rate = 0.0;
  std::optional<double> mean_length;
  std::optional<double> min_length;
  std::optional<double> median_length;
  std::optional<double> max_length;
  double mean_wall_time = 0.0;
};

/// Aggregates per (algorithm, budget). Independent of record order.
std::vector<SummaryRow> summarize(const std::vector<BenchRecord>& records);

/// Deterministic records file: everything except wall time.
void write_records_csv(std::ostream& out, const std::vector<BenchRecord>& records);
void write_timings_csv(std::ostream& out, const std::vector<BenchRecord>& records);
void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);
std::string format_summary(const std::vector<SummaryRow>& rows);

}  // namespace dubins_rrt
