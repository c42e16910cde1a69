#include "subsat/qubo_inner.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

#include "subsat/sat_to_qubo.hpp"

namespace subsat {

namespace {

struct Probe {
  SubProblem sub;
  std::size_t qubo_size = 0;
};

Probe probe(const SatState& state, const SelectorConfig& selector, std::size_t m, Rng& rng) {
  Probe p;
  const std::vector<Var> vars = select_variables(selector, state, m, rng);
  p.sub = build_subproblem(state, vars);
  p.qubo_size = p.sub.size() + count_aux_clauses(p.sub.formula);
  return p;
}

}  // namespace

MController make_controller(const CnfFormula& formula, std::size_t q_max,
                            const SizingModel& sizing, double slack_threshold) {
  const std::size_t n = formula.num_variables();
  MController ctrl;
  ctrl.slack_threshold = slack_threshold;
  ctrl.m_min = 1;
  if (sizing.trained()) {
    ctrl.m_max = sizing.propose(sizing_features(formula, static_cast<double>(q_max)), n);
    ctrl.set(sizing.propose(sizing_features(formula, slack_threshold * static_cast<double>(q_max)), n));
  } else {
    ctrl.m_max = n;
    ctrl.set(std::max<std::size_t>(1, q_max / 2));
  }
  ctrl.initialised = true;
  return ctrl;
}

QuboInnerResult qubo_inner_optimize(const SatState& state, const QuboInnerParams& params,
                                    MController& ctrl, Rng& rng) {
  if (params.q_max < 2) throw std::invalid_argument("q_max must be at least 2");
  if (!ctrl.initialised) throw std::invalid_argument("controller not initialised");

  QuboInnerResult result;
  const std::size_t proposed = ctrl.current_m;
  Probe first = probe(state, params.selector, proposed, rng);
  result.probes = 1;
  std::optional<Probe> chosen;
  if (first.qubo_size <= params.q_max) {
    chosen = std::move(first);
  } else {
    std::size_t lo = 1;
    std::size_t hi = proposed - 1;
    while (lo <= hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      Probe p = probe(state, params.selector, mid, rng);
      ++result.probes;
      if (p.qubo_size <= params.q_max) {
        chosen = std::move(p);
        lo = mid + 1;
      } else {
        hi = mid - 1;
      }
    }
    if (!chosen) throw std::logic_error("no sub-SAT size fits the QUBO budget");
    ctrl.set(chosen->sub.size());
  }

  const double slack_limit = ctrl.slack_threshold * static_cast<double>(params.q_max);
  if (static_cast<double>(chosen->qubo_size) <= slack_limit) {
    ctrl.set(chosen->sub.size() + ctrl.step_up());
  }

  result.sub = std::move(chosen->sub);
  result.qubo = subsat_to_qubo(result.sub);
  TabuParams tabu = default_tabu_params(result.qubo.size(), rng(), params.tabu_steps_per_var);
  if (params.tabu_tenure != 0) tabu.tenure = params.tabu_tenure;
  tabu.restarts = params.tabu_restarts;
  const Bits init = encode_assignment(result.sub.formula, result.qubo, result.sub.base_state);
  result.solution = tabu_search(result.qubo, init, tabu);
  result.local = decode_solution(result.sub, result.qubo, result.solution.bits);
  return result;
}

CalibrationReport calibrate_sizing(const SatState& state, std::size_t q_max,
                                   const SelectorConfig& selector, Rng& rng, std::size_t probes) {
  const CnfFormula& formula = state.formula();
  const std::size_t n = formula.num_variables();
  const double hi = static_cast<double>(std::min(q_max, n));
  const double lo = std::max(1.0, std::min(hi, static_cast<double>(q_max) / 20.0));

  CalibrationReport report;
  for (std::size_t k = 0; k < probes; ++k) {
    const double t = probes > 1 ? static_cast<double>(k) / static_cast<double>(probes - 1) : 1.0;
    const auto m = static_cast<std::size_t>(std::lround(lo * std::pow(hi / lo, t)));
    const Probe p = probe(state, selector, std::clamp<std::size_t>(m, 1, n), rng);
    report.qubo_sizes.push_back(p.qubo_size);
    report.samples.push_back(SizingSample{
        sizing_features(formula, static_cast<double>(p.qubo_size)), static_cast<double>(p.sub.size())});
  }
  report.fit = fit_sizing(report.samples);
  return report;
}

}  // namespace subsat
