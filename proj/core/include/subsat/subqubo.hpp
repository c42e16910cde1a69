#pragma once

#include <span>
#include <string>
#include <vector>

#include "subsat/cnf.hpp"
#include "subsat/qubo.hpp"
#include "subsat/solver.hpp"

namespace subsat {

/// Bits of a full QUBO plus incremental flip deltas.
class QuboState {
 public:
  QuboState(const QuboProblem& problem, Bits bits);

  [[nodiscard]] const QuboProblem& problem() const { return *problem_; }
  [[nodiscard]] const Bits& bits() const { return bits_; }
  [[nodiscard]] double energy() const { return energy_; }
  [[nodiscard]] double flip_delta(std::size_t i) const { return delta_[i]; }
  [[nodiscard]] std::span<const double> flip_deltas() const { return delta_; }
  [[nodiscard]] std::size_t size() const { return bits_.size(); }

  void flip(std::size_t i);

 private:
  const QuboProblem* problem_;
  Bits bits_;
  std::vector<double> delta_;
  double energy_ = 0.0;
};

/// A QUBO restricted to `chosen`, with every other bit fixed at its current
/// value and folded into the linear terms and the constant.
struct SubQubo {
  std::vector<std::uint32_t> chosen;
  QuboProblem problem;
};

/// Throws std::invalid_argument on duplicate or out-of-range indices.
[[nodiscard]] SubQubo clamp(const QuboState& qs, std::span<const std::uint32_t> chosen);

/// The m bits whose flip lowers the objective most, after adding uniform
/// noise in [0, 1e-6) to each delta to break ties at random.
[[nodiscard]] std::vector<std::uint32_t> subqubo_select_energy(const QuboState& qs, std::size_t m,
                                                               Rng& rng);
[[nodiscard]] std::vector<std::uint32_t> subqubo_select_random(const QuboState& qs, std::size_t m,
                                                               Rng& rng);

enum class SubQuboSelector { kEnergy, kRandom };

[[nodiscard]] std::string to_string(SubQuboSelector s);
[[nodiscard]] SubQuboSelector parse_subqubo_selector(const std::string& name);

struct SubQuboConfig {
  SubQuboSelector selector = SubQuboSelector::kRandom;
  std::size_t q = 250;
  std::size_t max_iters = 1000;
  std::size_t conv = 20;
  std::uint64_t seed = 0;
  std::size_t tabu_tenure = 0;  // 0 selects clamp(q/4, 4, 20)
  std::size_t tabu_steps_per_var = 100;
  std::size_t tabu_restarts = 1;
};

/// Converts the whole formula to a QUBO once, then repeatedly clamps q
/// selected bits, tabu-optimises the clamped problem from the current bits
/// and writes the result back. Energies in the trace are SAT energies of
/// the x-part; qubo_objective carries the full QUBO objective.
[[nodiscard]] RunTrace subqubo_solve(const CnfFormula& formula, const SubQuboConfig& config);

}  // namespace subsat
