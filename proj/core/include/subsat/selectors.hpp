#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "subsat/cnf.hpp"
#include "subsat/sat_state.hpp"

namespace subsat {

enum class SelectorKind { kRandom, kEnergy, kSoftmax, kGraph };

[[nodiscard]] std::string to_string(SelectorKind kind);
/// Accepts "random", "energy", "softmax", "graph"; throws std::invalid_argument.
[[nodiscard]] SelectorKind parse_selector_kind(const std::string& name);

/// Edge weight for a clause with n unsatisfied literals: n^exponent.
struct PowerWeight {
  double exponent = 1.0;
  [[nodiscard]] double operator()(int unsat_literals) const;
};

using EdgeWeightFn = std::function<double(int)>;

struct SelectorConfig {
  SelectorKind kind = SelectorKind::kEnergy;
  double graph_exponent = 1.0;
  std::size_t graph_swap_budget = 0;  // 0 selects 3*m capped at N+L
};

[[nodiscard]] std::vector<Var> select_random(const SatState& state, std::size_t m, Rng& rng);

/// The m variables with the most negative flip delta; ties go to the lower index.
[[nodiscard]] std::vector<Var> select_energy(const SatState& state, std::size_t m);

/// m draws without replacement with probability proportional to
/// exp(-flip_delta), renormalised over the remaining variables each draw.
[[nodiscard]] std::vector<Var> select_softmax(const SatState& state, std::size_t m, Rng& rng);

/// Clause/variable incidence graph with state-dependent edge weights and an
/// in/out partition. Nodes 0..N-1 are variables, N..N+L-1 are clauses. Every
/// edge of clause node c weighs f(unsatisfied literals of c). connectivity(v)
/// is the total weight from v to its neighbours currently in the in-set.
class BipartiteGraph {
 public:
  BipartiteGraph(const SatState& state, const EdgeWeightFn& weight);

  [[nodiscard]] std::size_t num_variables() const { return formula_->num_variables(); }
  [[nodiscard]] std::size_t num_nodes() const { return in_.size(); }
  [[nodiscard]] std::size_t num_edges() const { return formula_->num_literals(); }
  [[nodiscard]] bool is_variable(std::size_t node) const { return node < num_variables(); }
  [[nodiscard]] double clause_weight(ClauseId c) const { return clause_weight_[c]; }
  [[nodiscard]] bool in(std::size_t node) const { return in_[node] != 0; }
  [[nodiscard]] double connectivity(std::size_t node) const { return connectivity_[node]; }
  [[nodiscard]] std::size_t variables_in() const { return variables_in_; }
  /// Sum of connectivity over the in-set (twice the internal edge weight).
  [[nodiscard]] double in_set_connectivity() const { return 2.0 * internal_weight_; }
  /// Weight of the edge between two nodes, 0 when not adjacent.
  [[nodiscard]] double edge_weight(std::size_t a, std::size_t b) const;

  void move_in(std::size_t node);
  void move_out(std::size_t node);

  /// Connectivity of `node` recomputed from the in-set.
  [[nodiscard]] double recompute_connectivity(std::size_t node) const;

  /// Calls fn(neighbour, weight) for every edge at `node`.
  template <typename Fn>
  void for_each_neighbour(std::size_t node, Fn&& fn) const {
    const std::size_t n = num_variables();
    if (node < n) {
      for (const Occurrence& occ : formula_->occurrences(static_cast<Var>(node))) {
        fn(n + occ.clause, clause_weight_[occ.clause]);
      }
    } else {
      const auto c = static_cast<ClauseId>(node - n);
      for (const Literal& lit : formula_->clause(c)) fn(std::size_t{lit.var}, clause_weight_[c]);
    }
  }

 private:
  void shift_neighbours(std::size_t node, double sign);

  const CnfFormula* formula_;
  std::vector<double> clause_weight_;
  std::vector<std::uint8_t> in_;
  std::vector<double> connectivity_;
  std::size_t variables_in_ = 0;
  double internal_weight_ = 0.0;
};

/// Observer invoked after every swap-and-rebalance step of select_graph.
using GraphStepObserver = std::function<void(const BipartiteGraph&)>;

/// Dense-subgraph selection on the incidence graph: start from m random
/// variable nodes, repeatedly swap the best outside node with the worst inside
/// node, then restore exactly m variable nodes inside. A step that does not
/// raise the in-set's total connectivity is undone and ends the search.
[[nodiscard]] std::vector<Var> select_graph(const SatState& state, std::size_t m,
                                            const EdgeWeightFn& weight, std::size_t swap_budget,
                                            Rng& rng, const GraphStepObserver& observer = {});

[[nodiscard]] std::size_t default_swap_budget(const CnfFormula& formula, std::size_t m);

/// Dispatches on config.kind.
[[nodiscard]] std::vector<Var> select_variables(const SelectorConfig& config,
                                                const SatState& state, std::size_t m, Rng& rng);

}  // namespace subsat
