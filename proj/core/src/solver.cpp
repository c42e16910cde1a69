#include "subsat/solver.hpp"

#include <chrono>

#include "subsat/exact_bnb.hpp"
#include "subsat/qubo_inner.hpp"

namespace subsat {

std::string to_string(InnerKind kind) {
  switch (kind) {
    case InnerKind::kWalkSat: return "walksat";
    case InnerKind::kExact: return "exact";
    case InnerKind::kQuboTabu: return "qubo";
  }
  return "unknown";
}

InnerKind parse_inner_kind(const std::string& name) {
  if (name == "walksat") return InnerKind::kWalkSat;
  if (name == "exact") return InnerKind::kExact;
  if (name == "qubo") return InnerKind::kQuboTabu;
  throw std::invalid_argument("unknown inner optimizer '" + name + "'");
}

std::string to_string(StopReason reason) {
  switch (reason) {
    case StopReason::kConverged: return "converged";
    case StopReason::kMaxIters: return "max_iters";
    case StopReason::kZeroEnergy: return "zero_energy";
  }
  return "unknown";
}

void validate(const SolverConfig& config, const CnfFormula& formula) {
  const std::size_t n = formula.num_variables();
  if (config.max_iters < 1) throw ConfigError("max_iters must be >= 1");
  if (config.conv < 1) throw ConfigError("conv must be >= 1");
  if (n == 0) throw ConfigError("formula has no variables");
  if (config.inner == InnerKind::kQuboTabu) {
    if (config.m < 2) throw ConfigError("q_max must be >= 2");
    if (config.tabu_steps_per_var < 1) throw ConfigError("tabu steps per variable must be >= 1");
  } else if (config.m < 1 || config.m > n) {
    throw ConfigError("m=" + std::to_string(config.m) + " outside [1, " + std::to_string(n) + "]");
  }
  if (config.inner == InnerKind::kWalkSat &&
      (config.walksat_noise < 0.0 || config.walksat_noise > 1.0)) {
    throw ConfigError("WalkSAT noise must be in [0, 1]");
  }
  if (config.inner == InnerKind::kExact) {
    if (config.m > config.exact_max_vars) {
      throw ConfigError("m=" + std::to_string(config.m) + " exceeds the exact optimizer ceiling " +
                        std::to_string(config.exact_max_vars));
    }
    if (config.exact_node_budget < 1) throw ConfigError("node budget must be >= 1");
  }
  if (config.slack_threshold <= 0.0 || config.slack_threshold > 1.0) {
    throw ConfigError("slack threshold must be in (0, 1]");
  }
}

ComposeResult compose(SatState& state, const SubProblem& sub, const Assignment& local) {
  if (local.size() != sub.size()) {
    throw std::invalid_argument("local assignment has " + std::to_string(local.size()) +
                                " entries, subproblem has " + std::to_string(sub.size()));
  }
  const int change = sub_energy(sub, local) - sub.base_energy;
  if (change > 0) return {false, 0};
  for (std::size_t i = 0; i < local.size(); ++i) {
    const Var v = sub.dynamic_vars[i];
    if (state.assignment()[v] != local[i]) state.flip(v);
  }
  return {true, change};
}

bool StopRule::record(int energy) {
  ++iterations_;
  improved_ = energy < best_;
  if (improved_) {
    best_ = energy;
    stale_ = 0;
  } else {
    ++stale_;
  }
  if (energy == 0) {
    reason_ = StopReason::kZeroEnergy;
    return true;
  }
  if (stale_ >= conv_) {
    reason_ = StopReason::kConverged;
    return true;
  }
  if (iterations_ >= max_iters_) {
    reason_ = StopReason::kMaxIters;
    return true;
  }
  return false;
}

namespace {

using Clock = std::chrono::steady_clock;

double micros_since(Clock::time_point start) {
  return std::chrono::duration<double, std::micro>(Clock::now() - start).count();
}

}  // namespace

RunTrace solve(const CnfFormula& formula, const SolverConfig& config) {
  validate(config, formula);
  Rng rng(config.seed);
  SatState state(formula, random_assignment(formula.num_variables(), rng));

  RunTrace trace;
  trace.initial_energy = state.energy();
  trace.best_energy = state.energy();
  trace.best_assignment = state.assignment();
  if (state.energy() == 0) {
    trace.stop_reason = StopReason::kZeroEnergy;
    return trace;
  }

  MController ctrl;
  QuboInnerParams qubo_params;
  if (config.inner == InnerKind::kQuboTabu) {
    qubo_params.q_max = config.m;
    qubo_params.selector = config.selector;
    qubo_params.tabu_tenure = config.tabu_tenure;
    qubo_params.tabu_steps_per_var = config.tabu_steps_per_var;
    qubo_params.tabu_restarts = config.tabu_restarts;
    SizingModel model;
    if (config.sizing) model = calibrate_sizing(state, config.m, config.selector, rng).fit.model;
    ctrl = make_controller(formula, config.m, model, config.slack_threshold);
  }

  StopRule stop(config.max_iters, config.conv, state.energy());
  for (std::size_t iter = 1;; ++iter) {
    IterationRecord rec;
    rec.iteration = iter;
    SubProblem sub;
    Assignment local;

    auto t0 = Clock::now();
    if (config.inner == InnerKind::kQuboTabu) {
      QuboInnerResult r = qubo_inner_optimize(state, qubo_params, ctrl, rng);
      rec.optimize_us = micros_since(t0);
      rec.q = r.qubo.size();
      rec.probes = r.probes;
      rec.qubo_objective = r.solution.objective;
      sub = std::move(r.sub);
      local = std::move(r.local);
    } else {
      const std::vector<Var> vars = select_variables(config.selector, state, config.m, rng);
      sub = build_subproblem(state, vars);
      rec.select_us = micros_since(t0);
      auto t1 = Clock::now();
      if (config.inner == InnerKind::kWalkSat) {
        WalkSatParams wp;
        wp.noise = config.walksat_noise;
        wp.max_flips = config.walksat_flips_per_var * sub.size();
        wp.heuristic = config.walksat_heuristic;
        local = walksat_optimize(sub, wp, rng);
      } else {
        local = exact_bnb(sub, config.exact_node_budget).assignment;
      }
      rec.optimize_us = micros_since(t1);
    }
    rec.m = sub.size();
    rec.sub_energy_before = sub.base_energy;
    rec.sub_energy_after = sub_energy(sub, local);

    auto t2 = Clock::now();
    rec.accepted = compose(state, sub, local).accepted;
    rec.compose_us = micros_since(t2);
    rec.energy = state.energy();

    const bool done = stop.record(state.energy());
    if (stop.improved()) {
      trace.best_energy = state.energy();
      trace.best_assignment = state.assignment();
    }
    rec.best_energy = trace.best_energy;
    trace.iterations.push_back(rec);
    if (done) {
      trace.iterations_run = iter;
      trace.stop_reason = stop.reason();
      return trace;
    }
  }
}

}  // namespace subsat
