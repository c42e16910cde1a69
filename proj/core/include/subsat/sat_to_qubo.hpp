#pragma once

#include "subsat/cnf.hpp"
#include "subsat/qubo.hpp"
#include "subsat/subproblem.hpp"

namespace subsat {

/// QUBO whose minimum over the auxiliary bits equals the number of
/// unsatisfied clauses of `formula`.
///
/// Variables 0..N-1 are the CNF variables; each 3-literal clause adds one
/// auxiliary bit w after them, in clause order. With l = x (positive) or
/// l = 1 - x (negative), each clause contributes
///
///   k = 1:  1 - l1
///   k = 2:  (1 - l1)(1 - l2)
///   k = 3:  1 - [(1 + w)(l1 + l2 + l3) - l1 l2 - l1 l3 - l2 l3 - 2w]
///
/// so Q = N + (number of 3-literal clauses).
[[nodiscard]] QuboProblem cnf_to_qubo(const CnfFormula& formula);

[[nodiscard]] inline QuboProblem subsat_to_qubo(const SubProblem& sub) {
  return cnf_to_qubo(sub.formula);
}

/// Bits for assignment x with every auxiliary bit set to its
/// clause-optimal value, so qubo_energy == energy_of(formula, x).
[[nodiscard]] Bits encode_assignment(const CnfFormula& formula, const QuboProblem& q,
                                     const Assignment& x);

/// The SAT-variable bits of a QUBO solution, in variable order.
/// Throws std::invalid_argument if the role map does not fit `num_variables`.
[[nodiscard]] Assignment decode_bits(const QuboProblem& q, std::span<const std::uint8_t> bits,
                                     std::size_t num_variables);

[[nodiscard]] inline Assignment decode_solution(const SubProblem& sub, const QuboProblem& q,
                                                std::span<const std::uint8_t> bits) {
  return decode_bits(q, bits, sub.size());
}

/// Number of 3-literal clauses, i.e. auxiliary bits the encoding needs.
[[nodiscard]] std::size_t count_aux_clauses(const CnfFormula& formula);

}  // namespace subsat
