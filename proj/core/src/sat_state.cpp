#include "subsat/sat_state.hpp"

#include <stdexcept>
#include <string>

namespace subsat {

SatState::SatState(const CnfFormula& formula, Assignment assignment)
    : formula_(&formula),
      assignment_(std::move(assignment)),
      sat_count_(formula.num_clauses(), 0),
      flip_delta_(formula.num_variables(), 0),
      unsat_pos_(formula.num_clauses(), -1) {
  if (assignment_.size() != formula.num_variables()) {
    throw std::invalid_argument("assignment has " + std::to_string(assignment_.size()) +
                                " entries, formula has " +
                                std::to_string(formula.num_variables()) + " variables");
  }
  for (ClauseId c = 0; c < formula.num_clauses(); ++c) {
    auto lits = formula.clause(c);
    const Literal* sole = nullptr;
    for (const Literal& lit : lits) {
      if (lit.satisfied_by(value(lit.var))) {
        ++sat_count_[c];
        sole = &lit;
      }
    }
    if (sat_count_[c] == 0) {
      mark_unsat(c);
      for (const Literal& lit : lits) --flip_delta_[lit.var];
    } else if (sat_count_[c] == 1) {
      ++flip_delta_[sole->var];
    }
  }
}

void SatState::mark_unsat(ClauseId c) {
  unsat_pos_[c] = static_cast<int>(unsat_.size());
  unsat_.push_back(c);
}

void SatState::mark_sat(ClauseId c) {
  const int pos = unsat_pos_[c];
  const ClauseId last = unsat_.back();
  unsat_[pos] = last;
  unsat_pos_[last] = pos;
  unsat_.pop_back();
  unsat_pos_[c] = -1;
}

void SatState::flip(Var v) {
  if (v >= assignment_.size()) {
    throw std::out_of_range("flip: variable " + std::to_string(v) + " out of range");
  }
  assignment_[v] ^= 1;
  const bool now = value(v);
  for (const Occurrence& occ : formula_->occurrences(v)) {
    const ClauseId c = occ.clause;
    auto lits = formula_->clause(c);
    if (occ.positive == now) {
      // literal became true
      const int before = sat_count_[c]++;
      if (before == 0) {
        mark_sat(c);
        for (const Literal& lit : lits) ++flip_delta_[lit.var];
        ++flip_delta_[v];
      } else if (before == 1) {
        for (const Literal& lit : lits) {
          if (lit.var != v && lit.satisfied_by(value(lit.var))) {
            --flip_delta_[lit.var];
            break;
          }
        }
      }
    } else {
      const int before = sat_count_[c]--;
      if (before == 1) {
        mark_unsat(c);
        --flip_delta_[v];
        for (const Literal& lit : lits) --flip_delta_[lit.var];
      } else if (before == 2) {
        for (const Literal& lit : lits) {
          if (lit.satisfied_by(value(lit.var))) {
            ++flip_delta_[lit.var];
            break;
          }
        }
      }
    }
  }
}

int SatState::break_count(Var v) const {
  int count = 0;
  for (const Occurrence& occ : formula_->occurrences(v)) {
    if (sat_count_[occ.clause] == 1 && occ.positive == value(v)) ++count;
  }
  return count;
}

int SatState::make_count(Var v) const {
  int count = 0;
  for (const Occurrence& occ : formula_->occurrences(v)) {
    if (sat_count_[occ.clause] == 0) ++count;
  }
  return count;
}

bool operator==(const SatState& a, const SatState& b) {
  if (a.formula_ != b.formula_ || a.assignment_ != b.assignment_ ||
      a.sat_count_ != b.sat_count_ || a.flip_delta_ != b.flip_delta_ ||
      a.unsat_.size() != b.unsat_.size()) {
    return false;
  }
  for (std::size_t c = 0; c < a.unsat_pos_.size(); ++c) {
    if ((a.unsat_pos_[c] < 0) != (b.unsat_pos_[c] < 0)) return false;
  }
  return true;
}

}  // namespace subsat
