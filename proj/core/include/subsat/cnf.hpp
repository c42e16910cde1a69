#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace subsat {

using Var = std::uint32_t;
using ClauseId = std::uint32_t;
using Rng = std::mt19937_64;

/// A truth assignment; one 0/1 entry per variable.
using Assignment = std::vector<std::uint8_t>;

inline constexpr std::size_t kMaxClauseWidth = 3;

struct Literal {
  Var var = 0;
  bool positive = true;

  /// True when the literal evaluates to true under `value`.
  [[nodiscard]] bool satisfied_by(bool value) const { return value == positive; }

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Occurrence {
  ClauseId clause = 0;
  bool positive = true;
};

/// Immutable clause database. Clauses hold 1..3 literals over distinct
/// variables; construction rejects anything else with std::invalid_argument.
class CnfFormula {
 public:
  CnfFormula() = default;
  CnfFormula(std::size_t num_variables, const std::vector<std::vector<Literal>>& clauses);

  [[nodiscard]] std::size_t num_variables() const { return num_variables_; }
  [[nodiscard]] std::size_t num_clauses() const { return offsets_.size() - 1; }
  [[nodiscard]] std::size_t num_literals() const { return literals_.size(); }
  [[nodiscard]] std::size_t max_clause_width() const { return max_width_; }

  [[nodiscard]] std::span<const Literal> clause(ClauseId c) const {
    return {literals_.data() + offsets_[c], offsets_[c + 1] - offsets_[c]};
  }
  [[nodiscard]] std::span<const Occurrence> occurrences(Var v) const {
    return {occurrences_.data() + occ_offsets_[v], occ_offsets_[v + 1] - occ_offsets_[v]};
  }

  [[nodiscard]] std::vector<std::vector<Literal>> clause_list() const;

  friend bool operator==(const CnfFormula& a, const CnfFormula& b) {
    return a.num_variables_ == b.num_variables_ && a.offsets_ == b.offsets_ &&
           a.literals_ == b.literals_;
  }

 private:
  std::size_t num_variables_ = 0;
  std::size_t max_width_ = 0;
  std::vector<Literal> literals_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Occurrence> occurrences_;
  std::vector<std::size_t> occ_offsets_{0};
};

/// Number of clauses left unsatisfied by `assignment`, counted from scratch.
[[nodiscard]] int energy_of(const CnfFormula& formula, const Assignment& assignment);

[[nodiscard]] bool clause_satisfied(std::span<const Literal> clause, const Assignment& assignment);

/// Uniform random k-CNF: each clause draws k distinct variables without
/// replacement and an independent fair polarity for each.
[[nodiscard]] CnfFormula generate_random_ksat(std::size_t n, std::size_t l, std::size_t k,
                                              std::uint64_t seed);

[[nodiscard]] Assignment random_assignment(std::size_t n, Rng& rng);

}  // namespace subsat
