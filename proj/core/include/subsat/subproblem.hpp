#pragma once

#include <span>
#include <vector>

#include "subsat/cnf.hpp"
#include "subsat/sat_state.hpp"

namespace subsat {

/// A pruned sub-SAT instance over the dynamic variables of a global state.
///
/// Clauses without dynamic variables, and clauses already satisfied by a
/// frozen literal, are dropped. The surviving clauses keep only their
/// dynamic literals. For every local assignment B:
///
///   energy_of(global, merge(assignment, B)) == frozen_energy + sub_energy(B)
struct SubProblem {
  std::vector<Var> dynamic_vars;  // local index -> global variable
  CnfFormula formula;             // reduced clauses over local indices
  Assignment base_state;          // current values of the dynamic variables
  int frozen_energy = 0;          // unsatisfied dropped clauses (constant)
  int base_energy = 0;            // sub_energy(base_state)

  [[nodiscard]] std::size_t size() const { return dynamic_vars.size(); }
};

/// Throws std::invalid_argument on empty, duplicate or out-of-range input.
[[nodiscard]] SubProblem build_subproblem(const SatState& state, std::span<const Var> dynamic_vars);

[[nodiscard]] inline int sub_energy(const SubProblem& sub, const Assignment& local) {
  return energy_of(sub.formula, local);
}

/// The global assignment with the dynamic variables overwritten by `local`.
[[nodiscard]] Assignment merge(const Assignment& global, const SubProblem& sub,
                               const Assignment& local);

}  // namespace subsat
