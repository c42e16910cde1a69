#include "subsat/walksat.hpp"

#include <stdexcept>

#include "subsat/sat_state.hpp"

namespace subsat {

std::string to_string(WalkSatHeuristic h) {
  switch (h) {
    case WalkSatHeuristic::kBreak: return "break";
    case WalkSatHeuristic::kMake: return "make";
    case WalkSatHeuristic::kEnergy: return "energy";
  }
  return "unknown";
}

WalkSatHeuristic parse_walksat_heuristic(const std::string& name) {
  if (name == "break") return WalkSatHeuristic::kBreak;
  if (name == "make") return WalkSatHeuristic::kMake;
  if (name == "energy") return WalkSatHeuristic::kEnergy;
  throw std::invalid_argument("unknown WalkSAT heuristic '" + name + "'");
}

namespace {

// Lower is better for every heuristic.
int score(const SatState& state, Var v, WalkSatHeuristic h) {
  switch (h) {
    case WalkSatHeuristic::kBreak: return state.break_count(v);
    case WalkSatHeuristic::kMake: return -state.make_count(v);
    case WalkSatHeuristic::kEnergy: return state.flip_delta(v);
  }
  return 0;
}

}  // namespace

Assignment walksat(const CnfFormula& formula, Assignment start, const WalkSatParams& params,
                   Rng& rng) {
  SatState state(formula, std::move(start));
  Assignment best = state.assignment();
  int best_energy = state.energy();
  std::bernoulli_distribution noisy(params.noise);

  for (std::size_t flip = 0; flip < params.max_flips && best_energy > 0; ++flip) {
    auto unsat = state.unsat_clauses();
    std::uniform_int_distribution<std::size_t> pick_clause(0, unsat.size() - 1);
    auto lits = formula.clause(unsat[pick_clause(rng)]);
    Var chosen = lits[0].var;
    if (noisy(rng)) {
      std::uniform_int_distribution<std::size_t> pick_lit(0, lits.size() - 1);
      chosen = lits[pick_lit(rng)].var;
    } else {
      int best_score = score(state, chosen, params.heuristic);
      for (std::size_t i = 1; i < lits.size(); ++i) {
        const Var v = lits[i].var;
        const int s = score(state, v, params.heuristic);
        if (s < best_score || (s == best_score && v < chosen)) {
          chosen = v;
          best_score = s;
        }
      }
    }
    state.flip(chosen);
    if (state.energy() < best_energy) {
      best_energy = state.energy();
      best = state.assignment();
    }
  }
  return best;
}

}  // namespace subsat
