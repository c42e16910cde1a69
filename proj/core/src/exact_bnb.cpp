#include "subsat/exact_bnb.hpp"

#include <algorithm>
#include <stdexcept>

namespace subsat {

namespace {

constexpr std::int8_t kFree = -1;

class BranchAndBound {
 public:
  BranchAndBound(const CnfFormula& formula, std::size_t node_budget)
      : f_(formula),
        budget_(node_budget),
        value_(formula.num_variables(), kFree),
        sat_(formula.num_clauses(), 0),
        free_(formula.num_clauses(), 0),
        unit_pos_(formula.num_variables(), 0),
        unit_neg_(formula.num_variables(), 0) {
    for (ClauseId c = 0; c < f_.num_clauses(); ++c) {
      free_[c] = static_cast<int>(f_.clause(c).size());
    }
  }

  ExactResult run(const Assignment& incumbent) {
    best_ = incumbent;
    best_energy_ = energy_of(f_, incumbent);
    if (best_energy_ > 0) search(0);
    return ExactResult{best_, best_energy_, !exhausted_, nodes_};
  }

 private:
  void assign(Var v, std::int8_t b) {
    value_[v] = b;
    for (const Occurrence& occ : f_.occurrences(v)) {
      --free_[occ.clause];
      if (occ.positive == (b == 1)) {
        ++sat_[occ.clause];
      } else if (sat_[occ.clause] == 0 && free_[occ.clause] == 0) {
        ++falsified_;
      }
    }
  }

  void unassign(Var v) {
    const std::int8_t b = value_[v];
    for (const Occurrence& occ : f_.occurrences(v)) {
      if (occ.positive == (b == 1)) {
        --sat_[occ.clause];
      } else if (sat_[occ.clause] == 0 && free_[occ.clause] == 0) {
        --falsified_;
      }
      ++free_[occ.clause];
    }
    value_[v] = kFree;
  }

  // Falsified clauses plus, per variable, the number of disjoint pairs of
  // complementary unit clauses (x) and (not x): each pair costs at least one.
  int lower_bound() {
    int bound = falsified_;
    std::fill(unit_pos_.begin(), unit_pos_.end(), 0);
    std::fill(unit_neg_.begin(), unit_neg_.end(), 0);
    touched_.clear();
    for (ClauseId c = 0; c < f_.num_clauses(); ++c) {
      if (sat_[c] != 0 || free_[c] != 1) continue;
      for (const Literal& lit : f_.clause(c)) {
        if (value_[lit.var] != kFree) continue;
        if (unit_pos_[lit.var] == 0 && unit_neg_[lit.var] == 0) touched_.push_back(lit.var);
        ++(lit.positive ? unit_pos_ : unit_neg_)[lit.var];
      }
    }
    for (Var v : touched_) bound += std::min(unit_pos_[v], unit_neg_[v]);
    return bound;
  }

  void search(std::size_t depth) {
    if (exhausted_) return;
    if (falsified_ >= best_energy_) return;
    if (depth == f_.num_variables()) {
      best_energy_ = falsified_;
      for (std::size_t v = 0; v < value_.size(); ++v) best_[v] = value_[v] == 1 ? 1 : 0;
      return;
    }
    if (lower_bound() >= best_energy_) return;

    // Branch variable and preferred polarity from open-clause occurrences.
    Var branch = 0;
    int branch_score = -1;
    int pos_open = 0;
    int neg_open = 0;
    for (Var v = 0; v < f_.num_variables(); ++v) {
      if (value_[v] != kFree) continue;
      int pos = 0;
      int neg = 0;
      for (const Occurrence& occ : f_.occurrences(v)) {
        if (sat_[occ.clause] == 0) ++(occ.positive ? pos : neg);
      }
      if (pos + neg > branch_score) {
        branch = v;
        branch_score = pos + neg;
        pos_open = pos;
        neg_open = neg;
      }
    }

    const std::int8_t first = pos_open >= neg_open ? 1 : 0;
    for (std::int8_t b : {first, static_cast<std::int8_t>(1 - first)}) {
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return;
      }
      assign(branch, b);
      search(depth + 1);
      unassign(branch);
      if (exhausted_ || best_energy_ == 0) return;
    }
  }

  const CnfFormula& f_;
  std::size_t budget_;
  std::vector<std::int8_t> value_;
  std::vector<int> sat_;
  std::vector<int> free_;
  std::vector<int> unit_pos_;
  std::vector<int> unit_neg_;
  std::vector<Var> touched_;
  int falsified_ = 0;
  Assignment best_;
  int best_energy_ = 0;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

ExactResult exact_maxsat(const CnfFormula& formula, const Assignment& incumbent,
                         std::size_t node_budget) {
  if (incumbent.size() != formula.num_variables()) {
    throw std::invalid_argument("incumbent size does not match formula");
  }
  BranchAndBound bnb(formula, node_budget);
  return bnb.run(incumbent);
}

}  // namespace subsat
