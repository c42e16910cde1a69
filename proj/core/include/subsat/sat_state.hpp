#pragma once

#include <span>
#include <vector>

#include "subsat/cnf.hpp"

namespace subsat {

/// Mutable search state over a formula: the assignment plus per-clause
/// satisfied-literal counts, the unsatisfied-clause set, and every
/// variable's flip delta (energy change if flipped alone). flip() touches
/// only the clauses containing the flipped variable.
///
/// The formula must outlive the state.
class SatState {
 public:
  SatState(const CnfFormula& formula, Assignment assignment);

  [[nodiscard]] const CnfFormula& formula() const { return *formula_; }
  [[nodiscard]] const Assignment& assignment() const { return assignment_; }
  [[nodiscard]] bool value(Var v) const { return assignment_[v] != 0; }
  [[nodiscard]] int energy() const { return static_cast<int>(unsat_.size()); }
  [[nodiscard]] int flip_delta(Var v) const { return flip_delta_[v]; }
  [[nodiscard]] std::span<const int> flip_deltas() const { return flip_delta_; }
  [[nodiscard]] int sat_count(ClauseId c) const { return sat_count_[c]; }
  [[nodiscard]] std::span<const ClauseId> unsat_clauses() const { return unsat_; }

  /// Clauses that flipping `v` would turn from satisfied to unsatisfied.
  [[nodiscard]] int break_count(Var v) const;
  /// Clauses that flipping `v` would turn from unsatisfied to satisfied.
  [[nodiscard]] int make_count(Var v) const;

  void flip(Var v);

  /// Compares the logical state; the order of the unsatisfied-clause list
  /// is an implementation detail and is ignored.
  friend bool operator==(const SatState& a, const SatState& b);

 private:
  void mark_unsat(ClauseId c);
  void mark_sat(ClauseId c);

  const CnfFormula* formula_;
  Assignment assignment_;
  std::vector<int> sat_count_;
  std::vector<int> flip_delta_;
  std::vector<ClauseId> unsat_;
  std::vector<int> unsat_pos_;
};

}  // namespace subsat
