#pragma once

#include "subsat/cnf.hpp"
#include "subsat/subproblem.hpp"

namespace subsat {

struct ExactResult {
  Assignment assignment;
  int energy = 0;
  bool optimal = false;  // search finished inside the node budget
  std::size_t nodes = 0;
};

/// Depth-first branch and bound for unweighted Max-SAT.
///
/// Branches on the free variable that occurs in the most not-yet-satisfied
/// clauses. A node is pruned when falsified clauses plus disjoint
/// complementary unit-clause pairs reach the incumbent, which starts at
/// `incumbent`. When the budget runs out the best incumbent is returned
/// with optimal = false.
[[nodiscard]] ExactResult exact_maxsat(const CnfFormula& formula, const Assignment& incumbent,
                                       std::size_t node_budget);

[[nodiscard]] inline ExactResult exact_bnb(const SubProblem& sub, std::size_t node_budget) {
  return exact_maxsat(sub.formula, sub.base_state, node_budget);
}

}  // namespace subsat
