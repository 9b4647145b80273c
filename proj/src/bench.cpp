#include "dubins_rrt/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <map>
#include <thread>

#include "dubins_rrt/audit.hpp"
#include "dubins_rrt/errors.hpp"

namespace dubins_rrt {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string_view verdict_name(AuditVerdict v) {
  switch (v) {
    case AuditVerdict::Skipped: return "skipped";
    case AuditVerdict::Passed: return "passed";
    case AuditVerdict::Failed: return "failed";
  }
  return "?";
}

BenchRecord run_one(const Scenario& scenario, Algorithm algorithm, std::size_t budget, std::uint64_t seed, bool audit) {
  BenchRecord rec;
  rec.algorithm = algorithm;
  rec.budget = budget;
  rec.seed = seed;
  PlannerConfig cfg = scenario.config;
  cfg.n_iter = budget;
  cfg.seed = seed;
  try {
    const auto t0 = std::chrono::steady_clock::now();
    const PlanResult result = plan(algorithm, scenario.env, scenario.start, scenario.goal, cfg);
    rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rec.solved = result.solution.has_value();
    if (rec.solved) rec.path_length = result.solution->total_length;
    rec.nodes = result.tree.size();
    rec.rewires = result.stats.rewires;
    for (std::size_t i = 1; i < result.best_cost_trace.size(); ++i) {
      if (result.best_cost_trace[i] > result.best_cost_trace[i - 1]) rec.trace_nonincreasing = false;
    }
    if (audit) {
      const AuditReport report = audit_result(result, scenario.env, cfg.collision_resolution / 2.0);
      rec.audit = report.ok() ? AuditVerdict::Passed : AuditVerdict::Failed;
    }
  } catch (const Error& e) {
    rec.error = e.what();
  }
  return rec;
}

double median_of_sorted(const std::vector<double>& v) {
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

void BenchSpec::validate() const {
  if (algorithms.empty()) throw ScenarioError("bench spec needs at least one algorithm");
  if (sample_budgets.empty()) throw ScenarioError("bench spec needs at least one sample budget");
  if (seeds.empty()) throw ScenarioError("bench spec needs at least one seed");
  for (const auto b : sample_budgets) {
    if (b == 0) throw ScenarioError("sample budgets must be positive");
  }
}

BenchSpec bench_spec_from_json(const json& doc, const std::filesystem::path& base_dir) {
  if (!doc.is_object()) throw ScenarioError("bench spec must be an object");
  static const std::vector<std::string> allowed{"scenario", "algorithms", "sample_budgets", "seeds", "output", "audit",
                                                "threads"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ScenarioError("unknown key '" + key + "' in bench spec");
    }
  }
  BenchSpec spec;
  try {
    std::filesystem::path scenario = doc.at("scenario").get<std::string>();
    spec.scenario = scenario.is_absolute() ? scenario : base_dir / scenario;
    for (const auto& a : doc.at("algorithms")) {
      const auto algo = algorithm_from_string(a.get<std::string>());
      if (!algo) throw ScenarioError("unknown algorithm '" + a.get<std::string>() + "'");
      spec.algorithms.push_back(*algo);
    }
    spec.sample_budgets = doc.at("sample_budgets").get<std::vector<std::size_t>>();
    spec.seeds = doc.at("seeds").get<std::vector<std::uint64_t>>();
    if (doc.contains("output")) spec.output = doc["output"].get<std::string>();
    if (doc.contains("audit")) spec.audit = doc["audit"].get<bool>();
    if (doc.contains("threads")) spec.threads = doc["threads"].get<unsigned>();
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("malformed bench spec: ") + e.what());
  }
  spec.validate();
  return spec;
}

BenchSpec load_bench_spec(const std::filesystem::path& path) {
  return bench_spec_from_json(read_json_file(path), path.parent_path());
}

std::vector<BenchRecord> run_bench(const BenchSpec& spec) {
  spec.validate();
  return run_bench(spec, load_scenario(spec.scenario));
}

std::vector<BenchRecord> run_bench(const BenchSpec& spec, const Scenario& scenario) {
  spec.validate();
  struct Job {
    Algorithm algorithm;
    std::size_t budget;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (const auto a : spec.algorithms) {
    for (const auto b : spec.sample_budgets) {
      for (const auto s : spec.seeds) jobs.push_back({a, b, s});
    }
  }
  std::sort(jobs.begin(), jobs.end(), [](const Job& x, const Job& y) {
    return std::tie(x.algorithm, x.budget, x.seed) < std::tie(y.algorithm, y.budget, y.seed);
  });

  std::vector<BenchRecord> records(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      records[i] = run_one(scenario, jobs[i].algorithm, jobs[i].budget, jobs[i].seed, spec.audit);
    }
  };
  unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(jobs.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return records;
}

std::vector<SummaryRow> summarize(const std::vector<BenchRecord>& records) {
  struct Acc {
    std::size_t runs = 0;
    std::vector<double> lengths;
    std::vector<double> times;
  };
  std::map<std::pair<Algorithm, std::size_t>, Acc> groups;
  for (const auto& r : records) {
    Acc& acc = groups[{r.algorithm, r.budget}];
    ++acc.runs;
    acc.times.push_back(r.wall_time);
    if (r.solved && r.path_length) acc.lengths.push_back(*r.path_length);
  }

  std::vector<SummaryRow> rows;
  for (auto& [key, acc] : groups) {
    SummaryRow row;
    row.algorithm = key.first;
    row.budget = key.second;
    row.runs = acc.runs;
    row.solved = acc.lengths.size();
    row.solve_rate = static_cast<double>(row.solved) / static_cast<double>(row.runs);
    // Sorting first makes every aggregate independent of record order.
    std::sort(acc.lengths.begin(), acc.lengths.end());
    std::sort(acc.times.begin(), acc.times.end());
    if (!acc.lengths.empty()) {
      double sum = 0.0;
      for (const double v : acc.lengths) sum += v;
      row.min_length = acc.lengths.front();
      row.max_length = acc.lengths.back();
      row.mean_length = std::clamp(sum / static_cast<double>(acc.lengths.size()), *row.min_length, *row.max_length);
      row.median_length = median_of_sorted(acc.lengths);
    }
    double tsum = 0.0;
    for (const double t : acc.times) tsum += t;
    row.mean_wall_time = tsum / static_cast<double>(acc.times.size());
    rows.push_back(row);
  }
  return rows;
}

void write_records_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "algorithm,budget,seed,solved,path_length,nodes,rewires,audit,trace_nonincreasing,error\n";
  for (const auto& r : records) {
    std::string error = r.error;
    std::replace(error.begin(), error.end(), ',', ';');
    std::replace(error.begin(), error.end(), '\n', ' ');
    out << to_string(r.algorithm) << ',' << r.budget << ',' << r.seed << ',' << (r.solved ? 1 : 0) << ','
        << (r.path_length ? fmt_double(*r.path_length) : "") << ',' << r.nodes << ',' << r.rewires << ','
        << verdict_name(r.audit) << ',' << (r.trace_nonincreasing ? 1 : 0) << ',' << error << '\n';
  }
}

void write_timings_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "algorithm,budget,seed,wall_time\n";
  for (const auto& r : records) {
    out << to_string(r.algorithm) << ',' << r.budget << ',' << r.seed << ',' << fmt_double(r.wall_time) << '\n';
  }
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  auto opt = [](const std::optional<double>& v) { return v ? fmt_double(*v) : std::string(); };
  out << "algorithm,budget,runs,solved,solve_rate,mean_length,min_length,median_length,max_length,mean_wall_time\n";
  for (const auto& r : rows) {
    out << to_string(r.algorithm) << ',' << r.budget << ',' << r.runs << ',' << r.solved << ','
        << fmt_double(r.solve_rate) << ',' << opt(r.mean_length) << ',' << opt(r.min_length) << ','
        << opt(r.median_length) << ',' << opt(r.max_length) << ',' << fmt_double(r.mean_wall_time) << '\n';
  }
}

std::string format_summary(const std::vector<SummaryRow>& rows) {
  auto opt = [](const std::optional<double>& v) {
    char buf[32];
    if (!v) return std::string("-");
    std::snprintf(buf, sizeof buf, "%.2f", *v);
    return std::string(buf);
  };
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-9s %7s %5s %7s %9s %9s %9s %10s\n", "algorithm", "samples", "runs", "solved",
                "mean", "min", "median", "time [s]");
  out += line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%-9s %7zu %5zu %6.0f%% %9s %9s %9s %10.3f\n", std::string(to_string(r.algorithm)).c_str(),
                  r.budget, r.runs, 100.0 * r.solve_rate, opt(r.mean_length).c_str(), opt(r.min_length).c_str(),
                  opt(r.median_length).c_str(), r.mean_wall_time);
    out += line;
  }
  return out;
}

}  // namespace dubins_rrt
