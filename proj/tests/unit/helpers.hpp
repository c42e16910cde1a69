#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "subsat/cnf.hpp"
#include "subsat/qubo.hpp"

namespace subsat::testing {

inline Literal pos(Var v) { return {v, true}; }
inline Literal neg(Var v) { return {v, false}; }

inline Assignment bits_of(std::uint64_t mask, std::size_t n) {
  Assignment a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = (mask >> i) & 1u;
  return a;
}

/// Random formula whose clause widths are drawn from 1..max_k.
inline CnfFormula random_mixed_formula(std::size_t n, std::size_t l, std::size_t max_k, Rng& rng) {
  std::vector<std::vector<Literal>> clauses;
  std::uniform_int_distribution<std::size_t> width(1, std::min(max_k, n));
  std::bernoulli_distribution coin(0.5);
  for (std::size_t c = 0; c < l; ++c) {
    std::vector<Var> vars(n);
    for (std::size_t i = 0; i < n; ++i) vars[i] = static_cast<Var>(i);
    std::shuffle(vars.begin(), vars.end(), rng);
    const std::size_t k = width(rng);
    std::vector<Literal> clause;
    for (std::size_t i = 0; i < k; ++i) clause.push_back({vars[i], coin(rng)});
    clauses.push_back(std::move(clause));
  }
  return CnfFormula(n, clauses);
}

/// Minimum energy over all 2^N assignments.
inline int brute_force_min(const CnfFormula& f) {
  int best = std::numeric_limits<int>::max();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.num_variables()); ++mask) {
    best = std::min(best, energy_of(f, bits_of(mask, f.num_variables())));
  }
  return best;
}

/// Dense random QUBO with integer coefficients in [-range, range].
inline QuboProblem random_qubo(std::size_t q, int range, double density, Rng& rng) {
  std::uniform_int_distribution<int> coeff(-range, range);
  std::bernoulli_distribution keep(density);
  QuboBuilder b(q);
  b.add_constant(coeff(rng));
  for (std::size_t i = 0; i < q; ++i) {
    b.add_linear(i, coeff(rng));
    for (std::size_t j = i + 1; j < q; ++j) {
      if (keep(rng)) b.add_quadratic(i, j, coeff(rng));
    }
  }
  return b.build();
}

inline double brute_force_qubo_min(const QuboProblem& q) {
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << q.size()); ++mask) {
    best = std::min(best, qubo_energy(q, bits_of(mask, q.size())));
  }
  return best;
}

}  // namespace subsat::testing
