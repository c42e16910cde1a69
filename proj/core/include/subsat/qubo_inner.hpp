#pragma once

#include <vector>

#include "subsat/qubo.hpp"
#include "subsat/sat_state.hpp"
#include "subsat/selectors.hpp"
#include "subsat/sizing.hpp"
#include "subsat/subproblem.hpp"
#include "subsat/tabu.hpp"

namespace subsat {

struct QuboInnerParams {
  std::size_t q_max = 200;
  SelectorConfig selector;
  std::size_t tabu_tenure = 0;  // 0 selects clamp(Q/4, 4, 20)
  std::size_t tabu_steps_per_var = 100;
  std::size_t tabu_restarts = 1;
};

struct QuboInnerResult {
  SubProblem sub;
  QuboProblem qubo;
  QuboSolution solution;
  Assignment local;
  std::size_t probes = 0;  // selection + pruning + conversion attempts
};

/// Controller for a state and QUBO budget. With a trained model the first
/// proposal targets slack * q_max and M never grows past the model's
/// estimate for q_max itself; untrained, M starts at q_max / 2 and may grow
/// to N.
[[nodiscard]] MController make_controller(const CnfFormula& formula, std::size_t q_max,
                                          const SizingModel& sizing, double slack_threshold = 0.9);

/// Selects ctrl.current_m variables, prunes, and converts to QUBO. If the
/// QUBO is larger than q_max, binary-searches M on [1, M) with a fresh
/// selection per probe and keeps the largest M that fits. A QUBO that
/// leaves more than (1 - slack) of the budget unused grows M for the next
/// call. Tabu then runs from the current assignment's encoding and the
/// SAT bits are decoded.
///
/// M = 1 always yields Q = 1, so with q_max >= 2 some probe always fits.
[[nodiscard]] QuboInnerResult qubo_inner_optimize(const SatState& state,
                                                  const QuboInnerParams& params,
                                                  MController& ctrl, Rng& rng);

struct CalibrationReport {
  SizingFit fit;
  std::vector<SizingSample> samples;
  std::vector<std::size_t> qubo_sizes;
};

/// Probes `probes` sub-SAT sizes on a geometric grid from q_max/20 to q_max
/// (capped at N), recording the QUBO size each produces, and fits the
/// sizing model to the (features, M) pairs.
[[nodiscard]] CalibrationReport calibrate_sizing(const SatState& state, std::size_t q_max,
                                                 const SelectorConfig& selector, Rng& rng,
                                                 std::size_t probes = 30);

}  // namespace subsat
