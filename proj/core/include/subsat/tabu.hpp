#pragma once

#include <cstdint>

#include "subsat/cnf.hpp"
#include "subsat/qubo.hpp"

namespace subsat {

struct TabuParams {
  std::size_t tenure = 4;
  std::size_t max_steps = 100;  // per restart
  std::size_t restarts = 1;
  std::uint64_t seed = 0;
  /// Recompute every flip delta after each step and throw std::logic_error on
  /// any mismatch with the incremental values. Quadratic cost; tests only.
  bool verify_deltas = false;
};

/// tenure = clamp(Q/4, 4, 20), max_steps = steps_per_var * Q, one restart.
[[nodiscard]] TabuParams default_tabu_params(std::size_t qubo_size, std::uint64_t seed,
                                             std::size_t steps_per_var = 100);

struct QuboSolution {
  Bits bits;
  double objective = 0.0;
};

/// Single-flip tabu search. Each step flips the admissible bit with the most
/// negative delta (uniformly random among ties), uphill if nothing improves. A
/// flipped bit stays tabu for `tenure` steps unless flipping it would beat
/// the best objective seen (aspiration). The first restart starts from
/// `init`; later restarts start from uniform random bits drawn from `seed`,
/// with auxiliary bits (when the QUBO has roles) moved to their optimum.
/// Returns the best bits visited, so the objective never exceeds that of
/// `init`.
[[nodiscard]] QuboSolution tabu_search(const QuboProblem& q, const Bits& init,
                                       const TabuParams& params);

}  // namespace subsat
