#include "subsat/cnf.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace subsat {

CnfFormula::CnfFormula(std::size_t num_variables,
                       const std::vector<std::vector<Literal>>& clauses)
    : num_variables_(num_variables) {
  std::vector<std::size_t> occ_count(num_variables, 0);
  offsets_.reserve(clauses.size() + 1);
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    const auto& clause = clauses[c];
    if (clause.empty() || clause.size() > kMaxClauseWidth) {
      throw std::invalid_argument("clause " + std::to_string(c) + " has " +
                                  std::to_string(clause.size()) + " literals (expected 1..3)");
    }
    for (std::size_t i = 0; i < clause.size(); ++i) {
      if (clause[i].var >= num_variables) {
        throw std::invalid_argument("clause " + std::to_string(c) + " references variable " +
                                    std::to_string(clause[i].var) + " >= " +
                                    std::to_string(num_variables));
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (clause[j].var == clause[i].var) {
          throw std::invalid_argument("clause " + std::to_string(c) + " repeats variable " +
                                      std::to_string(clause[i].var));
        }
      }
      ++occ_count[clause[i].var];
      literals_.push_back(clause[i]);
    }
    max_width_ = std::max(max_width_, clause.size());
    offsets_.push_back(literals_.size());
  }

  occ_offsets_.resize(num_variables + 1, 0);
  std::partial_sum(occ_count.begin(), occ_count.end(), occ_offsets_.begin() + 1);
  occurrences_.resize(literals_.size());
  std::vector<std::size_t> cursor(occ_offsets_.begin(), occ_offsets_.end() - 1);
  for (ClauseId c = 0; c < num_clauses(); ++c) {
    for (const Literal& lit : clause(c)) {
      occurrences_[cursor[lit.var]++] = Occurrence{c, lit.positive};
    }
  }
}

std::vector<std::vector<Literal>> CnfFormula::clause_list() const {
  std::vector<std::vector<Literal>> out;
  out.reserve(num_clauses());
  for (ClauseId c = 0; c < num_clauses(); ++c) {
    auto lits = clause(c);
    out.emplace_back(lits.begin(), lits.end());
  }
  return out;
}

bool clause_satisfied(std::span<const Literal> clause, const Assignment& assignment) {
  for (const Literal& lit : clause) {
    if (lit.satisfied_by(assignment[lit.var] != 0)) return true;
  }
  return false;
}

int energy_of(const CnfFormula& formula, const Assignment& assignment) {
  if (assignment.size() != formula.num_variables()) {
    throw std::invalid_argument("assignment has " + std::to_string(assignment.size()) +
                                " entries, formula has " +
                                std::to_string(formula.num_variables()) + " variables");
  }
  int unsat = 0;
  for (ClauseId c = 0; c < formula.num_clauses(); ++c) {
    if (!clause_satisfied(formula.clause(c), assignment)) ++unsat;
  }
  return unsat;
}

CnfFormula generate_random_ksat(std::size_t n, std::size_t l, std::size_t k,
                                std::uint64_t seed) {
  if (k < 1 || k > kMaxClauseWidth) {
    throw std::invalid_argument("clause width must be in 1..3");
  }
  if (n < k) {
    throw std::invalid_argument("need at least k variables (n=" + std::to_string(n) +
                                ", k=" + std::to_string(k) + ")");
  }
  Rng rng(seed);
  std::vector<Var> pool(n);
  std::iota(pool.begin(), pool.end(), Var{0});
  std::bernoulli_distribution coin(0.5);
  std::vector<std::vector<Literal>> clauses(l);
  for (auto& clause : clauses) {
    // Partial Fisher-Yates: the first k slots become the sample.
    for (std::size_t i = 0; i < k; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, n - 1);
      std::swap(pool[i], pool[pick(rng)]);
      clause.push_back(Literal{pool[i], coin(rng)});
    }
  }
  return CnfFormula(n, clauses);
}

Assignment random_assignment(std::size_t n, Rng& rng) {
  std::bernoulli_distribution coin(0.5);
  Assignment a(n);
  for (auto& v : a) v = coin(rng) ? 1 : 0;
  return a;
}

}  // namespace subsat
