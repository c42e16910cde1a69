#include "subsat/tabu.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace subsat {

TabuParams default_tabu_params(std::size_t qubo_size, std::uint64_t seed,
                               std::size_t steps_per_var) {
  TabuParams p;
  p.tenure = std::clamp<std::size_t>(qubo_size / 4, 4, 20);
  p.max_steps = std::max<std::size_t>(1, steps_per_var * qubo_size);
  p.restarts = 1;
  p.seed = seed;
  return p;
}

namespace {

constexpr double kImproveEps = 1e-9;

class TabuRun {
 public:
  TabuRun(const QuboProblem& q, Bits start) : q_(q), bits_(std::move(start)), delta_(q.size()) {
    energy_ = qubo_energy(q_, bits_);
    for (std::size_t i = 0; i < q_.size(); ++i) delta_[i] = qubo_flip_delta(q_, bits_, i);
  }

  [[nodiscard]] double energy() const { return energy_; }
  [[nodiscard]] const Bits& bits() const { return bits_; }
  [[nodiscard]] double delta(std::size_t i) const { return delta_[i]; }

  void flip(std::size_t i) {
    energy_ += delta_[i];
    bits_[i] ^= 1;
    delta_[i] = -delta_[i];
    const double change = bits_[i] ? 1.0 : -1.0;
    for (const QuboNeighbour& nb : q_.neighbours(i)) {
      delta_[nb.var] += nb.coeff * change * (bits_[nb.var] ? -1.0 : 1.0);
    }
  }

  void verify() const {
    for (std::size_t i = 0; i < q_.size(); ++i) {
      const double fresh = qubo_flip_delta(q_, bits_, i);
      if (std::abs(fresh - delta_[i]) > 1e-6 * (1.0 + std::abs(fresh))) {
        throw std::logic_error("tabu flip delta drifted at bit " + std::to_string(i));
      }
    }
  }

 private:
  const QuboProblem& q_;
  Bits bits_;
  std::vector<double> delta_;
  double energy_ = 0.0;
};

}  // namespace

QuboSolution tabu_search(const QuboProblem& q, const Bits& init, const TabuParams& params) {
  if (init.size() != q.size()) {
    throw std::invalid_argument("tabu init has " + std::to_string(init.size()) +
                                " bits, QUBO has " + std::to_string(q.size()));
  }
  const std::size_t n = q.size();
  QuboSolution best{init, qubo_energy(q, init)};
  if (n == 0) return best;

  const std::size_t tenure = std::min(params.tenure, n - 1);
  Rng rng(params.seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<std::size_t> tabu_until(n);

  for (std::size_t restart = 0; restart < std::max<std::size_t>(1, params.restarts); ++restart) {
    Bits start = init;
    if (restart > 0) {
      for (auto& b : start) b = coin(rng) ? 1 : 0;
    }
    TabuRun run(q, std::move(start));
    if (restart > 0) {
      // Auxiliary bits are independent given x: one descent pass optimises
      // all of them.
      const auto roles = q.roles();
      for (std::size_t i = 0; i < roles.size(); ++i) {
        if (roles[i].role == QuboRole::kAux && run.delta(i) < 0.0) run.flip(i);
      }
    }
    if (run.energy() < best.objective - kImproveEps) best = {run.bits(), run.energy()};
    std::fill(tabu_until.begin(), tabu_until.end(), 0);

    for (std::size_t step = 0; step < params.max_steps; ++step) {
      // Ties between equally good moves are broken uniformly at random.
      std::size_t pick = n;
      std::size_t ties = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const double d = run.delta(i);
        const bool admissible =
            tabu_until[i] <= step || run.energy() + d < best.objective - kImproveEps;
        if (!admissible) continue;
        if (pick == n || d < run.delta(pick) - kImproveEps) {
          pick = i;
          ties = 1;
        } else if (d <= run.delta(pick) + kImproveEps &&
                   std::uniform_int_distribution<std::size_t>(0, ties++)(rng) == 0) {
          pick = i;
        }
      }
      if (pick == n) break;
      run.flip(pick);
      tabu_until[pick] = step + tenure + 1;
      if (params.verify_deltas) run.verify();
      if (run.energy() < best.objective - kImproveEps) best = {run.bits(), run.energy()};
    }
  }
  // Report the exact objective of the returned bits rather than the running sum.
  best.objective = qubo_energy(q, best.bits);
  return best;
}

}  // namespace subsat
