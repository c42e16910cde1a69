#include "subsat/selectors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace subsat {

std::string to_string(SelectorKind kind) {
  switch (kind) {
    case SelectorKind::kRandom: return "random";
    case SelectorKind::kEnergy: return "energy";
    case SelectorKind::kSoftmax: return "softmax";
    case SelectorKind::kGraph: return "graph";
  }
  return "unknown";
}

SelectorKind parse_selector_kind(const std::string& name) {
  if (name == "random") return SelectorKind::kRandom;
  if (name == "energy") return SelectorKind::kEnergy;
  if (name == "softmax") return SelectorKind::kSoftmax;
  if (name == "graph") return SelectorKind::kGraph;
  throw std::invalid_argument("unknown selector '" + name + "'");
}

double PowerWeight::operator()(int unsat_literals) const {
  if (unsat_literals == 0) return exponent == 0.0 ? 1.0 : 0.0;
  return std::pow(static_cast<double>(unsat_literals), exponent);
}

namespace {

void check_count(const SatState& state, std::size_t m) {
  const std::size_t n = state.formula().num_variables();
  if (m < 1 || m > n) {
    throw std::invalid_argument("selection size " + std::to_string(m) + " outside [1, " +
                                std::to_string(n) + "]");
  }
}

}  // namespace

std::vector<Var> select_random(const SatState& state, std::size_t m, Rng& rng) {
  check_count(state, m);
  const std::size_t n = state.formula().num_variables();
  std::vector<Var> pool(n);
  std::iota(pool.begin(), pool.end(), Var{0});
  for (std::size_t i = 0; i < m; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(m);
  return pool;
}

std::vector<Var> select_energy(const SatState& state, std::size_t m) {
  check_count(state, m);
  std::vector<Var> order(state.formula().num_variables());
  std::iota(order.begin(), order.end(), Var{0});
  auto deltas = state.flip_deltas();
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m), order.end(),
                    [&](Var a, Var b) {
                      return deltas[a] != deltas[b] ? deltas[a] < deltas[b] : a < b;
                    });
  order.resize(m);
  return order;
}

std::vector<Var> select_softmax(const SatState& state, std::size_t m, Rng& rng) {
  check_count(state, m);
  auto deltas = state.flip_deltas();
  const std::size_t n = deltas.size();
  const int best_gain = -*std::min_element(deltas.begin(), deltas.end());
  std::vector<double> weight(n);
  for (std::size_t i = 0; i < n; ++i) {
    weight[i] = std::exp(static_cast<double>(-deltas[i] - best_gain));
  }

  std::vector<Var> chosen;
  chosen.reserve(m);
  std::vector<std::uint8_t> taken(n, 0);
  for (std::size_t draw = 0; draw < m; ++draw) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!taken[i]) total += weight[i];
    }
    std::uniform_real_distribution<double> u(0.0, total);
    double target = u(rng);
    std::size_t pick = n;
    std::size_t last_free = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (taken[i]) continue;
      last_free = i;
      target -= weight[i];
      if (target < 0.0) {
        pick = i;
        break;
      }
    }
    if (pick == n) pick = last_free;  // rounding at the top of the range
    taken[pick] = 1;
    chosen.push_back(static_cast<Var>(pick));
  }
  return chosen;
}

BipartiteGraph::BipartiteGraph(const SatState& state, const EdgeWeightFn& weight)
    : formula_(&state.formula()),
      clause_weight_(state.formula().num_clauses()),
      in_(state.formula().num_variables() + state.formula().num_clauses(), 0),
      connectivity_(in_.size(), 0.0) {
  for (ClauseId c = 0; c < formula_->num_clauses(); ++c) {
    const int width = static_cast<int>(formula_->clause(c).size());
    clause_weight_[c] = weight(width - state.sat_count(c));
  }
}

double BipartiteGraph::edge_weight(std::size_t a, std::size_t b) const {
  if (is_variable(a) == is_variable(b)) return 0.0;
  const std::size_t var = is_variable(a) ? a : b;
  const auto c = static_cast<ClauseId>((is_variable(a) ? b : a) - num_variables());
  for (const Literal& lit : formula_->clause(c)) {
    if (lit.var == var) return clause_weight_[c];
  }
  return 0.0;
}

void BipartiteGraph::shift_neighbours(std::size_t node, double sign) {
  for_each_neighbour(node, [&](std::size_t other, double w) { connectivity_[other] += sign * w; });
}

void BipartiteGraph::move_in(std::size_t node) {
  if (in_[node]) return;
  in_[node] = 1;
  if (is_variable(node)) ++variables_in_;
  internal_weight_ += connectivity_[node];
  shift_neighbours(node, +1.0);
}

void BipartiteGraph::move_out(std::size_t node) {
  if (!in_[node]) return;
  in_[node] = 0;
  if (is_variable(node)) --variables_in_;
  internal_weight_ -= connectivity_[node];
  shift_neighbours(node, -1.0);
}

double BipartiteGraph::recompute_connectivity(std::size_t node) const {
  double total = 0.0;
  for_each_neighbour(node, [&](std::size_t other, double w) {
    if (in_[other]) total += w;
  });
  return total;
}

std::size_t default_swap_budget(const CnfFormula& formula, std::size_t m) {
  return std::min(3 * m, formula.num_variables() + formula.num_clauses());
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Extreme connectivity among nodes with in() == want_in, optionally only
// variable nodes. Ties resolve to the lowest node id.
std::size_t extreme_node(const BipartiteGraph& g, bool want_in, bool variables_only,
                         bool maximise) {
  const std::size_t limit = variables_only ? g.num_variables() : g.num_nodes();
  std::size_t best = kNone;
  double best_c = 0.0;
  for (std::size_t v = 0; v < limit; ++v) {
    if (g.in(v) != want_in) continue;
    const double c = g.connectivity(v);
    if (best == kNone || (maximise ? c > best_c : c < best_c)) {
      best = v;
      best_c = c;
    }
  }
  return best;
}

}  // namespace

std::vector<Var> select_graph(const SatState& state, std::size_t m, const EdgeWeightFn& weight,
                              std::size_t swap_budget, Rng& rng,
                              const GraphStepObserver& observer) {
  check_count(state, m);
  BipartiteGraph graph(state, weight);
  for (Var v : select_random(state, m, rng)) graph.move_in(v);

  struct Move {
    std::size_t node;
    bool entered;
  };
  std::vector<Move> moves;
  auto apply = [&](std::size_t node, bool enter) {
    if (enter) {
      graph.move_in(node);
    } else {
      graph.move_out(node);
    }
    moves.push_back({node, enter});
  };

  for (std::size_t step = 0; step < swap_budget; ++step) {
    const std::size_t enter = extreme_node(graph, false, false, true);
    const std::size_t leave = extreme_node(graph, true, false, false);
    if (enter == kNone || leave == kNone) break;
    const double before = graph.in_set_connectivity();
    moves.clear();
    apply(leave, false);
    apply(enter, true);
    while (graph.variables_in() < m) apply(extreme_node(graph, false, true, true), true);
    while (graph.variables_in() > m) apply(extreme_node(graph, true, true, false), false);
    if (!(graph.in_set_connectivity() > before + 1e-12)) {
      for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
        if (it->entered) {
          graph.move_out(it->node);
        } else {
          graph.move_in(it->node);
        }
      }
      break;
    }
    if (observer) observer(graph);
  }

  std::vector<Var> chosen;
  chosen.reserve(m);
  for (std::size_t v = 0; v < graph.num_variables(); ++v) {
    if (graph.in(v)) chosen.push_back(static_cast<Var>(v));
  }
  return chosen;
}

std::vector<Var> select_variables(const SelectorConfig& config, const SatState& state,
                                  std::size_t m, Rng& rng) {
  switch (config.kind) {
    case SelectorKind::kRandom: return select_random(state, m, rng);
    case SelectorKind::kEnergy: return select_energy(state, m);
    case SelectorKind::kSoftmax: return select_softmax(state, m, rng);
    case SelectorKind::kGraph: {
      const std::size_t budget = config.graph_swap_budget != 0
                                     ? config.graph_swap_budget
                                     : default_swap_budget(state.formula(), m);
      return select_graph(state, m, PowerWeight{config.graph_exponent}, budget, rng);
    }
  }
  throw std::invalid_argument("unknown selector kind");
}

}  // namespace subsat
