#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "subsat/cnf.hpp"
#include "subsat/solver.hpp"
#include "subsat/subqubo.hpp"
#include "subsat/trace_csv.hpp"

namespace subsat {

/// Syntax or vocabulary error in an experiment spec file.
class SpecError : public std::runtime_error {
 public:
  SpecError(std::size_t line, const std::string& what);
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct GeneratedSet {
  std::size_t n = 0;
  std::size_t l = 0;
};

enum class Baseline { kFullQubo, kWalkSatBreak, kWalkSatMake, kWalkSatEnergy, kExact };

[[nodiscard]] std::string to_string(Baseline b);
[[nodiscard]] Baseline parse_baseline(const std::string& name);

struct ExperimentSpec {
  // [instances]
  std::vector<GeneratedSet> generated;
  std::size_t k = 3;
  std::size_t count = 1;
  std::uint64_t instance_seed = 1;
  std::vector<std::filesystem::path> files;

  // [grid]
  std::vector<SelectorKind> selectors;
  std::vector<InnerKind> inners;
  std::vector<std::size_t> m_values;  // walksat and exact inners
  std::vector<std::size_t> q_values;  // qubo inner (q_max)
  std::vector<SubQuboSelector> subqubo_selectors;
  std::vector<std::size_t> subqubo_q;
  std::vector<Baseline> baselines;
  std::vector<std::uint64_t> seeds;
  SolverConfig base;  // shared solver parameters; selector, inner, m, seed are overridden
  std::size_t baseline_flips = 100000;
  std::size_t exact_max_n = 30;
  std::size_t exact_baseline_budget = 20000000;

  // [output]
  std::filesystem::path runs_path = "runs.csv";
  std::filesystem::path summary_path = "summary.csv";
  std::size_t threads = 1;
};

/// Parses the sectioned key=value format. Relative paths are resolved
/// against `base_dir`.
[[nodiscard]] ExperimentSpec parse_experiment_spec(std::istream& in,
                                                   const std::filesystem::path& base_dir = {});

struct Instance {
  std::string dataset;
  std::string name;
  CnfFormula formula;
};

/// "rand_n100_l400_k3_s7.cnf"
[[nodiscard]] std::string instance_file_name(std::size_t n, std::size_t l, std::size_t k,
                                             std::uint64_t seed);
/// "100v400c", with a "_k2" suffix when k != 3.
[[nodiscard]] std::string dataset_label(std::size_t n, std::size_t l, std::size_t k);

/// Generates and reads every instance. File errors surface as
/// std::runtime_error, malformed files as DimacsError.
[[nodiscard]] std::vector<Instance> load_instances(const ExperimentSpec& spec);

struct RunJob {
  std::size_t instance = 0;
  std::string method;  // "subsat", "subqubo" or "baseline"
  std::string selector;
  std::string inner;
  std::size_t mq = 0;
  std::uint64_t seed = 0;
  SolverConfig solver;
  SubQuboConfig subqubo;
  Baseline baseline = Baseline::kFullQubo;
};

/// Expands the grid in a fixed order and validates every point against
/// every instance; throws ConfigError or SpecError before anything runs.
[[nodiscard]] std::vector<RunJob> expand_grid(const ExperimentSpec& spec,
                                              const std::vector<Instance>& instances);

struct RunRow {
  std::string dataset;
  std::string instance;
  std::string method;
  std::string selector;
  std::string inner;
  std::size_t mq = 0;
  std::uint64_t seed = 0;
  int final_energy = 0;
  std::size_t iterations = 0;
  std::string stop_reason;
  std::int64_t wall_us = 0;

  bool operator==(const RunRow&) const = default;
};

[[nodiscard]] RunRow execute_job(const RunJob& job, const std::vector<Instance>& instances);

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

/// Runs every job on a pool of `threads` workers; rows come back in job
/// order whatever the thread count.
[[nodiscard]] std::vector<RunRow> run_jobs(const std::vector<RunJob>& jobs,
                                           const std::vector<Instance>& instances,
                                           std::size_t threads, const ProgressFn& progress = {});

struct SummaryRow {
  std::string dataset;
  std::string method;
  std::string selector;
  std::string inner;
  std::size_t mq = 0;
  double mean_energy = 0.0;
  double std_energy = 0.0;  // sample standard deviation, 0 for a single run
  double mean_iterations = 0.0;
  std::size_t max_iterations = 0;
  double mean_wall_us = 0.0;
  std::size_t runs = 0;
};

/// Groups rows by (dataset, method, selector, inner, mq) in order of first
/// appearance.
[[nodiscard]] std::vector<SummaryRow> summarize(const std::vector<RunRow>& rows);

[[nodiscard]] const csv::Row& run_columns();
[[nodiscard]] const csv::Row& summary_columns();
[[nodiscard]] csv::Row to_csv_row(const RunRow& row);
[[nodiscard]] csv::Row to_csv_row(const SummaryRow& row);

void write_runs_csv(const std::vector<RunRow>& rows, std::ostream& out);
void write_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out);

/// Parses a per-run CSV back into rows. Throws std::invalid_argument on a
/// wrong header or malformed numeric field.
[[nodiscard]] std::vector<RunRow> read_runs_csv(std::istream& in);

struct VerifyReport {
  std::size_t groups = 0;
  std::vector<std::string> mismatches;
  [[nodiscard]] bool ok() const { return mismatches.empty(); }
};

/// Recomputes the summary from per-run rows and compares it field by field
/// with a summary CSV.
[[nodiscard]] VerifyReport verify_summary(std::istream& runs_csv, std::istream& summary_csv);

}  // namespace subsat
