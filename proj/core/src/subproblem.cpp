#include "subsat/subproblem.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace subsat {

SubProblem build_subproblem(const SatState& state, std::span<const Var> dynamic_vars) {
  const CnfFormula& formula = state.formula();
  const std::size_t n = formula.num_variables();
  if (dynamic_vars.empty()) throw std::invalid_argument("no dynamic variables");

  constexpr int kFrozen = -1;
  std::vector<int> local_of(n, kFrozen);
  for (std::size_t i = 0; i < dynamic_vars.size(); ++i) {
    const Var v = dynamic_vars[i];
    if (v >= n) {
      throw std::invalid_argument("dynamic variable " + std::to_string(v) + " out of range");
    }
    if (local_of[v] != kFrozen) {
      throw std::invalid_argument("dynamic variable " + std::to_string(v) + " listed twice");
    }
    local_of[v] = static_cast<int>(i);
  }

  SubProblem sub;
  sub.dynamic_vars.assign(dynamic_vars.begin(), dynamic_vars.end());
  sub.base_state.resize(dynamic_vars.size());
  for (std::size_t i = 0; i < dynamic_vars.size(); ++i) {
    sub.base_state[i] = state.assignment()[dynamic_vars[i]];
  }

  // Only clauses touching a dynamic variable can survive; visit them once,
  // in global clause order so the reduced formula is deterministic.
  std::vector<std::uint8_t> touched(formula.num_clauses(), 0);
  std::vector<ClauseId> candidates;
  for (Var v : dynamic_vars) {
    for (const Occurrence& occ : formula.occurrences(v)) {
      if (!touched[occ.clause]) {
        touched[occ.clause] = 1;
        candidates.push_back(occ.clause);
      }
    }
  }
  std::sort(candidates.begin(), candidates.end());

  std::vector<std::vector<Literal>> reduced;
  int touched_unsat = 0;
  for (ClauseId c : candidates) {
    if (state.sat_count(c) == 0) ++touched_unsat;
    std::vector<Literal> kept;
    bool frozen_satisfied = false;
    for (const Literal& lit : formula.clause(c)) {
      if (local_of[lit.var] == kFrozen) {
        if (lit.satisfied_by(state.value(lit.var))) {
          frozen_satisfied = true;
          break;
        }
      } else {
        kept.push_back(Literal{static_cast<Var>(local_of[lit.var]), lit.positive});
      }
    }
    if (!frozen_satisfied) reduced.push_back(std::move(kept));
  }

  sub.formula = CnfFormula(dynamic_vars.size(), reduced);
  // Every touched clause that is unsatisfied now survives pruning, so the
  // untouched unsatisfied clauses make up the frozen remainder.
  sub.frozen_energy = state.energy() - touched_unsat;
  sub.base_energy = touched_unsat;
  return sub;
}

Assignment merge(const Assignment& global, const SubProblem& sub, const Assignment& local) {
  if (local.size() != sub.size()) {
    throw std::invalid_argument("local assignment has " + std::to_string(local.size()) +
                                " entries, subproblem has " + std::to_string(sub.size()));
  }
  Assignment merged = global;
  for (std::size_t i = 0; i < local.size(); ++i) merged[sub.dynamic_vars[i]] = local[i];
  return merged;
}

}  // namespace subsat
