#pragma once

#include <string>

#include "subsat/cnf.hpp"
#include "subsat/subproblem.hpp"

namespace subsat {

/// Greedy rule used on non-noise steps. kBreak minimises the number of
/// satisfied clauses the flip would break, kMake maximises the number of
/// unsatisfied clauses it would repair, kEnergy minimises the net change.
enum class WalkSatHeuristic { kBreak, kMake, kEnergy };

[[nodiscard]] std::string to_string(WalkSatHeuristic h);
[[nodiscard]] WalkSatHeuristic parse_walksat_heuristic(const std::string& name);

struct WalkSatParams {
  double noise = 0.5;
  std::size_t max_flips = 1000;
  WalkSatHeuristic heuristic = WalkSatHeuristic::kBreak;
};

/// WalkSAT from `start`: pick a random unsatisfied clause, flip a random
/// variable of it with probability `noise`, else the clause variable that is
/// best under the heuristic (lowest index on ties). Returns the best
/// assignment seen; stops early at energy 0.
[[nodiscard]] Assignment walksat(const CnfFormula& formula, Assignment start,
                                 const WalkSatParams& params, Rng& rng);

[[nodiscard]] inline Assignment walksat_optimize(const SubProblem& sub, const WalkSatParams& params,
                                                 Rng& rng) {
  return walksat(sub.formula, sub.base_state, params, rng);
}

}  // namespace subsat
