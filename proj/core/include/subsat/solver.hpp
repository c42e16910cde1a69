#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "subsat/cnf.hpp"
#include "subsat/sat_state.hpp"
#include "subsat/selectors.hpp"
#include "subsat/subproblem.hpp"
#include "subsat/walksat.hpp"

namespace subsat {

enum class InnerKind { kWalkSat, kExact, kQuboTabu };

[[nodiscard]] std::string to_string(InnerKind kind);
/// Accepts "walksat", "exact", "qubo".
[[nodiscard]] InnerKind parse_inner_kind(const std::string& name);

enum class StopReason { kConverged, kMaxIters, kZeroEnergy };

[[nodiscard]] std::string to_string(StopReason reason);

/// A configuration that does not fit the instance it is applied to.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SolverConfig {
  SelectorConfig selector;
  InnerKind inner = InnerKind::kWalkSat;
  /// Sub-SAT size M; for the QUBO inner optimizer, the QUBO budget q_max.
  std::size_t m = 75;
  std::size_t max_iters = 1000;
  std::size_t conv = 20;
  std::uint64_t seed = 0;

  double walksat_noise = 0.5;
  std::size_t walksat_flips_per_var = 20;
  WalkSatHeuristic walksat_heuristic = WalkSatHeuristic::kBreak;

  std::size_t exact_node_budget = 200000;
  std::size_t exact_max_vars = 50;

  std::size_t tabu_tenure = 0;  // 0 selects clamp(Q/4, 4, 20)
  std::size_t tabu_steps_per_var = 100;
  std::size_t tabu_restarts = 1;
  bool sizing = true;  // calibrate the M predictor before the run
  double slack_threshold = 0.9;
};

/// Throws ConfigError when `config` cannot run on `formula`.
void validate(const SolverConfig& config, const CnfFormula& formula);

struct IterationRecord {
  std::size_t iteration = 0;  // 1-based
  std::size_t m = 0;
  std::size_t q = 0;       // QUBO size, 0 when no QUBO is built
  std::size_t probes = 0;  // sizing probes, 0 when not applicable
  int sub_energy_before = 0;
  int sub_energy_after = 0;
  bool accepted = false;
  int energy = 0;  // global energy after compose
  int best_energy = 0;
  std::optional<double> qubo_objective;  // full-QUBO objective (sub-QUBO runs)
  double select_us = 0.0;
  double optimize_us = 0.0;
  double compose_us = 0.0;
};

struct RunTrace {
  std::vector<IterationRecord> iterations;
  int initial_energy = 0;
  int best_energy = 0;
  Assignment best_assignment;
  std::size_t iterations_run = 0;
  StopReason stop_reason = StopReason::kMaxIters;
};

struct ComposeResult {
  bool accepted = false;
  int energy_change = 0;
};

/// Writes `local` into the dynamic variables when it is no worse than the
/// base state on the subproblem (ties accepted). By prune soundness the
/// global energy then moves by sub_energy(local) - sub.base_energy.
ComposeResult compose(SatState& state, const SubProblem& sub, const Assignment& local);

/// Tracks best energy and the early-stopping rule shared by all loops.
class StopRule {
 public:
  StopRule(std::size_t max_iters, std::size_t conv, int initial_energy)
      : max_iters_(max_iters), conv_(conv), best_(initial_energy) {}

  /// Records one finished iteration; returns true when the run should stop.
  bool record(int energy);
  [[nodiscard]] bool improved() const { return improved_; }
  [[nodiscard]] int best() const { return best_; }
  [[nodiscard]] StopReason reason() const { return reason_; }

 private:
  std::size_t max_iters_;
  std::size_t conv_;
  int best_;
  std::size_t iterations_ = 0;
  std::size_t stale_ = 0;
  bool improved_ = false;
  StopReason reason_ = StopReason::kMaxIters;
};

/// Decompose / optimise / compose until the energy reaches zero, the best
/// energy fails to improve for `conv` iterations, or `max_iters` is hit.
[[nodiscard]] RunTrace solve(const CnfFormula& formula, const SolverConfig& config);

}  // namespace subsat
