#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace subsat {

using Bits = std::vector<std::uint8_t>;

enum class QuboRole : std::uint8_t { kSatVar, kAux };

/// What a QUBO variable stands for: a (local) SAT variable, or the
/// auxiliary bit of the clause with the given index.
struct QuboVarTag {
  QuboRole role = QuboRole::kSatVar;
  std::uint32_t index = 0;

  friend bool operator==(const QuboVarTag&, const QuboVarTag&) = default;
};

struct QuboTerm {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  double coeff = 0.0;

  friend bool operator==(const QuboTerm&, const QuboTerm&) = default;
};

struct QuboNeighbour {
  std::uint32_t var = 0;
  double coeff = 0.0;
};

/// Minimise  constant + sum_i linear_i b_i + sum_{i<j} q_ij b_i b_j  over
/// b in {0,1}^Q. Quadratic terms are strictly upper triangular, sorted, and
/// never zero. Build through QuboBuilder.
class QuboProblem {
 public:
  QuboProblem() = default;

  [[nodiscard]] std::size_t size() const { return linear_.size(); }
  [[nodiscard]] double constant() const { return constant_; }
  [[nodiscard]] double linear(std::size_t i) const { return linear_[i]; }
  [[nodiscard]] std::span<const double> linear() const { return linear_; }
  [[nodiscard]] std::span<const QuboTerm> quadratic() const { return quadratic_; }
  [[nodiscard]] std::span<const QuboNeighbour> neighbours(std::size_t i) const {
    return {adjacency_.data() + adj_offsets_[i], adj_offsets_[i + 1] - adj_offsets_[i]};
  }
  /// Empty for QUBOs that did not come from a CNF.
  [[nodiscard]] std::span<const QuboVarTag> roles() const { return roles_; }
  /// Non-zero linear plus quadratic coefficients.
  [[nodiscard]] std::size_t nonzeros() const;

 private:
  friend class QuboBuilder;

  double constant_ = 0.0;
  std::vector<double> linear_;
  std::vector<QuboTerm> quadratic_;
  std::vector<QuboNeighbour> adjacency_;
  std::vector<std::size_t> adj_offsets_{0};
  std::vector<QuboVarTag> roles_;
};

class QuboBuilder {
 public:
  explicit QuboBuilder(std::size_t size);

  void add_constant(double c) { constant_ += c; }
  void add_linear(std::size_t i, double c);
  /// i == j folds into the linear term (b*b == b).
  void add_quadratic(std::size_t i, std::size_t j, double c);
  void set_roles(std::vector<QuboVarTag> roles);

  [[nodiscard]] QuboProblem build() const;

 private:
  double constant_ = 0.0;
  std::vector<double> linear_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, double> quadratic_;
  std::vector<QuboVarTag> roles_;
};

/// Throws std::invalid_argument when bits.size() != q.size().
[[nodiscard]] double qubo_energy(const QuboProblem& q, std::span<const std::uint8_t> bits);

/// Objective change from flipping bit i alone.
[[nodiscard]] double qubo_flip_delta(const QuboProblem& q, std::span<const std::uint8_t> bits,
                                     std::size_t i);

/// Coordinate text format: `q <Q> <nnz> <constant>` then `i j coeff` lines,
/// with i == j for linear terms.
void write_qubo(const QuboProblem& q, std::ostream& out);
[[nodiscard]] QuboProblem read_qubo(std::istream& in);

}  // namespace subsat
