#include "subsat/subqubo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "subsat/sat_state.hpp"
#include "subsat/sat_to_qubo.hpp"
#include "subsat/tabu.hpp"

namespace subsat {

QuboState::QuboState(const QuboProblem& problem, Bits bits)
    : problem_(&problem), bits_(std::move(bits)), delta_(problem.size()) {
  energy_ = qubo_energy(problem, bits_);
  for (std::size_t i = 0; i < bits_.size(); ++i) delta_[i] = qubo_flip_delta(problem, bits_, i);
}

void QuboState::flip(std::size_t i) {
  energy_ += delta_[i];
  bits_[i] ^= 1;
  delta_[i] = -delta_[i];
  const double change = bits_[i] ? 1.0 : -1.0;
  for (const QuboNeighbour& nb : problem_->neighbours(i)) {
    delta_[nb.var] += nb.coeff * change * (bits_[nb.var] ? -1.0 : 1.0);
  }
}

SubQubo clamp(const QuboState& qs, std::span<const std::uint32_t> chosen) {
  const QuboProblem& q = qs.problem();
  constexpr std::int64_t kFixed = -1;
  std::vector<std::int64_t> local(q.size(), kFixed);
  for (std::size_t a = 0; a < chosen.size(); ++a) {
    if (chosen[a] >= q.size()) throw std::invalid_argument("clamp index out of range");
    if (local[chosen[a]] != kFixed) throw std::invalid_argument("clamp index repeated");
    local[chosen[a]] = static_cast<std::int64_t>(a);
  }
  const Bits& bits = qs.bits();
  QuboBuilder b(chosen.size());
  b.add_constant(q.constant());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (local[i] != kFixed) {
      b.add_linear(static_cast<std::size_t>(local[i]), q.linear(i));
    } else if (bits[i]) {
      b.add_constant(q.linear(i));
    }
  }
  for (const QuboTerm& t : q.quadratic()) {
    const bool fi = local[t.i] == kFixed;
    const bool fj = local[t.j] == kFixed;
    if (!fi && !fj) {
      b.add_quadratic(static_cast<std::size_t>(local[t.i]), static_cast<std::size_t>(local[t.j]),
                      t.coeff);
    } else if (!fi) {
      if (bits[t.j]) b.add_linear(static_cast<std::size_t>(local[t.i]), t.coeff);
    } else if (!fj) {
      if (bits[t.i]) b.add_linear(static_cast<std::size_t>(local[t.j]), t.coeff);
    } else if (bits[t.i] && bits[t.j]) {
      b.add_constant(t.coeff);
    }
  }
  return SubQubo{std::vector<std::uint32_t>(chosen.begin(), chosen.end()), b.build()};
}

namespace {

void check_count(const QuboState& qs, std::size_t m) {
  if (m < 1 || m > qs.size()) {
    throw std::invalid_argument("sub-QUBO size " + std::to_string(m) + " outside [1, " +
                                std::to_string(qs.size()) + "]");
  }
}

}  // namespace

std::vector<std::uint32_t> subqubo_select_energy(const QuboState& qs, std::size_t m, Rng& rng) {
  check_count(qs, m);
  std::uniform_real_distribution<double> noise(0.0, 1e-6);
  std::vector<double> score(qs.size());
  for (std::size_t i = 0; i < qs.size(); ++i) score[i] = qs.flip_delta(i) + noise(rng);
  std::vector<std::uint32_t> order(qs.size());
  std::iota(order.begin(), order.end(), 0u);
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m), order.end(),
                    [&](std::uint32_t a, std::uint32_t b) {
                      return score[a] != score[b] ? score[a] < score[b] : a < b;
                    });
  order.resize(m);
  return order;
}

std::vector<std::uint32_t> subqubo_select_random(const QuboState& qs, std::size_t m, Rng& rng) {
  check_count(qs, m);
  std::vector<std::uint32_t> pool(qs.size());
  std::iota(pool.begin(), pool.end(), 0u);
  for (std::size_t i = 0; i < m; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(m);
  return pool;
}

std::string to_string(SubQuboSelector s) {
  return s == SubQuboSelector::kEnergy ? "energy" : "random";
}

SubQuboSelector parse_subqubo_selector(const std::string& name) {
  if (name == "energy") return SubQuboSelector::kEnergy;
  if (name == "random") return SubQuboSelector::kRandom;
  throw std::invalid_argument("unknown sub-QUBO selector '" + name + "'");
}

RunTrace subqubo_solve(const CnfFormula& formula, const SubQuboConfig& config) {
  using Clock = std::chrono::steady_clock;
  const QuboProblem full = cnf_to_qubo(formula);
  if (config.q < 1 || config.q > full.size()) {
    throw ConfigError("sub-QUBO size q=" + std::to_string(config.q) + " outside [1, " +
                      std::to_string(full.size()) + "]");
  }
  if (config.max_iters < 1 || config.conv < 1) {
    throw ConfigError("max_iters and conv must be >= 1");
  }
  if (config.tabu_steps_per_var < 1) throw ConfigError("tabu steps per variable must be >= 1");

  Rng rng(config.seed);
  const std::size_t n = formula.num_variables();
  SatState sat(formula, random_assignment(n, rng));
  QuboState qs(full, encode_assignment(formula, full, sat.assignment()));

  RunTrace trace;
  trace.initial_energy = sat.energy();
  trace.best_energy = sat.energy();
  trace.best_assignment = sat.assignment();
  if (sat.energy() == 0) {
    trace.stop_reason = StopReason::kZeroEnergy;
    return trace;
  }

  StopRule stop(config.max_iters, config.conv, sat.energy());
  for (std::size_t iter = 1;; ++iter) {
    IterationRecord rec;
    rec.iteration = iter;
    rec.m = config.q;
    rec.q = config.q;

    auto t0 = Clock::now();
    const std::vector<std::uint32_t> chosen = config.selector == SubQuboSelector::kEnergy
                                                  ? subqubo_select_energy(qs, config.q, rng)
                                                  : subqubo_select_random(qs, config.q, rng);
    const SubQubo sq = clamp(qs, chosen);
    rec.select_us = std::chrono::duration<double, std::micro>(Clock::now() - t0).count();

    auto t1 = Clock::now();
    Bits init(chosen.size());
    for (std::size_t a = 0; a < chosen.size(); ++a) init[a] = qs.bits()[chosen[a]];
    TabuParams tabu = default_tabu_params(sq.problem.size(), rng(), config.tabu_steps_per_var);
    if (config.tabu_tenure != 0) tabu.tenure = config.tabu_tenure;
    tabu.restarts = config.tabu_restarts;
    const QuboSolution sol = tabu_search(sq.problem, init, tabu);
    rec.optimize_us = std::chrono::duration<double, std::micro>(Clock::now() - t1).count();

    auto t2 = Clock::now();
    const double before = qubo_energy(sq.problem, init);
    rec.sub_energy_before = static_cast<int>(std::lround(before));
    rec.sub_energy_after = static_cast<int>(std::lround(sol.objective));
    rec.accepted = sol.objective <= before;
    if (rec.accepted) {
      for (std::size_t a = 0; a < chosen.size(); ++a) {
        const std::uint32_t i = chosen[a];
        if (qs.bits()[i] == sol.bits[a]) continue;
        qs.flip(i);
        if (i < n) sat.flip(i);
      }
    }
    rec.compose_us = std::chrono::duration<double, std::micro>(Clock::now() - t2).count();
    rec.energy = sat.energy();
    rec.qubo_objective = qs.energy();

    const bool done = stop.record(sat.energy());
    if (stop.improved()) {
      trace.best_energy = sat.energy();
      trace.best_assignment = sat.assignment();
    }
    rec.best_energy = trace.best_energy;
    trace.iterations.push_back(rec);
    if (done) {
      trace.iterations_run = iter;
      trace.stop_reason = stop.reason();
      return trace;
    }
  }
}

}  // namespace subsat
