#include <gtest/gtest.h>

#include <numeric>

#include "helpers.hpp"
#include "subsat/sat_state.hpp"
#include "subsat/sat_to_qubo.hpp"
#include "subsat/selectors.hpp"
#include "subsat/solver.hpp"
#include "subsat/subqubo.hpp"

using namespace subsat;
using namespace subsat::testing;

namespace {

std::vector<SolverConfig> grid(std::size_t n) {
  std::vector<SolverConfig> out;
  for (SelectorKind sel :
       {SelectorKind::kRandom, SelectorKind::kEnergy, SelectorKind::kSoftmax, SelectorKind::kGraph}) {
    for (InnerKind inner : {InnerKind::kWalkSat, InnerKind::kExact, InnerKind::kQuboTabu}) {
      SolverConfig c;
      c.selector.kind = sel;
      c.inner = inner;
      c.m = inner == InnerKind::kQuboTabu ? 60 : (inner == InnerKind::kExact ? 12 : n / 2);
      c.max_iters = 40;
      c.conv = 8;
      c.tabu_steps_per_var = 20;
      out.push_back(c);
    }
  }
  return out;
}

void check_trace(const CnfFormula& f, const SolverConfig& c, const RunTrace& t) {
  EXPECT_LE(t.iterations_run, c.max_iters);
  EXPECT_EQ(t.iterations.size(), t.iterations_run);
  EXPECT_EQ(t.best_energy, energy_of(f, t.best_assignment));
  int prev_best = t.initial_energy;
  int prev_energy = t.initial_energy;
  std::size_t last_improvement = 0;
  for (const IterationRecord& r : t.iterations) {
    EXPECT_LE(r.best_energy, prev_best);
    EXPECT_LE(r.energy, prev_energy);
    EXPECT_EQ(r.best_energy, std::min(prev_best, r.energy));
    EXPECT_LE(r.sub_energy_after, r.sub_energy_before);
    if (r.best_energy < prev_best) last_improvement = r.iteration;
    prev_best = r.best_energy;
    prev_energy = r.energy;
  }
  EXPECT_EQ(prev_best, t.best_energy);
  switch (t.stop_reason) {
    case StopReason::kZeroEnergy:
      EXPECT_EQ(t.best_energy, 0);
      break;
    case StopReason::kConverged:
      EXPECT_EQ(t.iterations_run - last_improvement, c.conv);
      break;
    case StopReason::kMaxIters:
      EXPECT_EQ(t.iterations_run, c.max_iters);
      EXPECT_LT(t.iterations_run - last_improvement, c.conv);
      break;
  }
}

}  // namespace

TEST(Compose, IdentityIsAcceptedTie) {
  const CnfFormula f = generate_random_ksat(20, 90, 3, 1);
  Rng rng(1);
  SatState s(f, random_assignment(20, rng));
  const SubProblem sub = build_subproblem(s, select_random(s, 8, rng));
  const int before = s.energy();
  const ComposeResult r = compose(s, sub, sub.base_state);
  EXPECT_TRUE(r.accepted);
  EXPECT_EQ(r.energy_change, 0);
  EXPECT_EQ(s.energy(), before);
}

TEST(Compose, ExhaustiveEnergyChange) {
  Rng rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const CnfFormula f = random_mixed_formula(14, 55, 3, rng);
    const SatState s0(f, random_assignment(14, rng));
    const std::size_t m = 1 + trial % 10;
    const SubProblem sub = build_subproblem(s0, select_random(s0, m, rng));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      SatState s = s0;
      const Assignment local = bits_of(mask, m);
      const int d = sub_energy(sub, local) - sub.base_energy;
      const ComposeResult r = compose(s, sub, local);
      if (d <= 0) {
        ASSERT_TRUE(r.accepted);
        ASSERT_EQ(r.energy_change, d);
        ASSERT_EQ(s.energy(), s0.energy() + d);
        ASSERT_EQ(s.assignment(), merge(s0.assignment(), sub, local));
      } else {
        ASSERT_FALSE(r.accepted);
        ASSERT_EQ(s, s0);
        ASSERT_EQ(s.assignment(), s0.assignment());
      }
    }
  }
}

TEST(Compose, LengthMismatchThrows) {
  const CnfFormula f = generate_random_ksat(10, 30, 3, 3);
  SatState s(f, Assignment(10, 0));
  const SubProblem sub = build_subproblem(s, std::vector<Var>{1, 2, 3});
  EXPECT_THROW((void)compose(s, sub, Assignment(2, 0)), std::invalid_argument);
}

TEST(StopRule, Order) {
  StopRule zero(10, 2, 5);
  EXPECT_TRUE(zero.record(0));
  EXPECT_EQ(zero.reason(), StopReason::kZeroEnergy);

  StopRule conv(10, 2, 5);
  EXPECT_FALSE(conv.record(4));
  EXPECT_TRUE(conv.improved());
  EXPECT_FALSE(conv.record(4));
  EXPECT_TRUE(conv.record(4));
  EXPECT_EQ(conv.reason(), StopReason::kConverged);
  EXPECT_EQ(conv.best(), 4);

  StopRule cap(3, 10, 9);
  EXPECT_FALSE(cap.record(8));
  EXPECT_FALSE(cap.record(7));
  EXPECT_TRUE(cap.record(6));
  EXPECT_EQ(cap.reason(), StopReason::kMaxIters);

  StopRule both(2, 1, 5);
  EXPECT_FALSE(both.record(4));
  EXPECT_TRUE(both.record(4));
  EXPECT_EQ(both.reason(), StopReason::kConverged);
}

TEST(Solve, TrivialInstance) {
  const CnfFormula f(2, {{pos(0)}, {pos(1)}});
  for (SolverConfig c : grid(4)) {
    c.m = c.inner == InnerKind::kQuboTabu ? 4 : 2;
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      c.seed = seed;
      const RunTrace t = solve(f, c);
      EXPECT_EQ(t.best_energy, 0);
      EXPECT_EQ(t.stop_reason, StopReason::kZeroEnergy);
      EXPECT_LE(t.iterations_run, 3u);
    }
  }
}

TEST(Solve, TracePropertiesAcrossGrid) {
  const CnfFormula f = generate_random_ksat(60, 270, 3, 4);
  for (SolverConfig c : grid(60)) {
    for (std::uint64_t seed = 0; seed < 2; ++seed) {
      c.seed = seed;
      SCOPED_TRACE(to_string(c.selector.kind) + "/" + to_string(c.inner));
      check_trace(f, c, solve(f, c));
    }
  }
}

TEST(Solve, DeterministicForSeed) {
  const CnfFormula f = generate_random_ksat(50, 220, 3, 5);
  for (SolverConfig c : grid(50)) {
    c.seed = 77;
    const RunTrace a = solve(f, c);
    const RunTrace b = solve(f, c);
    ASSERT_EQ(a.iterations.size(), b.iterations.size());
    for (std::size_t i = 0; i < a.iterations.size(); ++i) {
      EXPECT_EQ(a.iterations[i].m, b.iterations[i].m);
      EXPECT_EQ(a.iterations[i].q, b.iterations[i].q);
      EXPECT_EQ(a.iterations[i].energy, b.iterations[i].energy);
    }
    EXPECT_EQ(a.best_assignment, b.best_assignment);
  }
}

TEST(Solve, QuboRunsStayWithinBudget) {
  const CnfFormula f = generate_random_ksat(80, 340, 3, 6);
  SolverConfig c;
  c.inner = InnerKind::kQuboTabu;
  c.selector.kind = SelectorKind::kSoftmax;
  c.m = 90;
  c.max_iters = 30;
  c.tabu_steps_per_var = 10;
  for (bool sizing : {true, false}) {
    c.sizing = sizing;
    const RunTrace t = solve(f, c);
    for (const IterationRecord& r : t.iterations) {
      EXPECT_LE(r.q, 90u);
      EXPECT_GE(r.probes, 1u);
    }
  }
}

TEST(Validate, RejectsBadConfigs) {
  const CnfFormula f = generate_random_ksat(20, 80, 3, 1);
  SolverConfig c;
  c.m = 21;
  EXPECT_THROW(validate(c, f), ConfigError);
  c.m = 0;
  EXPECT_THROW(validate(c, f), ConfigError);
  c.m = 10;
  c.max_iters = 0;
  EXPECT_THROW(validate(c, f), ConfigError);
  c.max_iters = 10;
  c.conv = 0;
  EXPECT_THROW(validate(c, f), ConfigError);
  c.conv = 5;
  c.walksat_noise = 1.5;
  EXPECT_THROW(validate(c, f), ConfigError);
  c.walksat_noise = 0.5;
  c.inner = InnerKind::kQuboTabu;
  c.m = 1;
  EXPECT_THROW(validate(c, f), ConfigError);
  c.m = 500;  // q_max may exceed N
  EXPECT_NO_THROW(validate(c, f));
  c.inner = InnerKind::kExact;
  c.m = 20;
  c.exact_max_vars = 15;
  EXPECT_THROW(validate(c, f), ConfigError);
  EXPECT_THROW((void)solve(f, c), ConfigError);
}

TEST(Names, RoundTrip) {
  for (InnerKind k : {InnerKind::kWalkSat, InnerKind::kExact, InnerKind::kQuboTabu}) {
    EXPECT_EQ(parse_inner_kind(to_string(k)), k);
  }
  EXPECT_EQ(to_string(StopReason::kConverged), "converged");
  EXPECT_EQ(to_string(StopReason::kMaxIters), "max_iters");
  EXPECT_EQ(to_string(StopReason::kZeroEnergy), "zero_energy");
}

TEST(Clamp, AllChosenLeavesProblemUnchanged) {
  Rng rng(1);
  const QuboProblem q = random_qubo(8, 5, 0.5, rng);
  const QuboState qs(q, Bits(8, 1));
  std::vector<std::uint32_t> all(8);
  std::iota(all.begin(), all.end(), 0u);
  const SubQubo sq = clamp(qs, all);
  EXPECT_DOUBLE_EQ(sq.problem.constant(), q.constant());
  for (std::size_t i = 0; i < 8; ++i) EXPECT_DOUBLE_EQ(sq.problem.linear(i), q.linear(i));
  EXPECT_TRUE(std::equal(q.quadratic().begin(), q.quadratic().end(),
                         sq.problem.quadratic().begin(), sq.problem.quadratic().end()));
}

TEST(Clamp, FoldsIntoLinearTerm) {
  QuboBuilder b(3);
  b.add_linear(0, 1.0);
  b.add_linear(1, 2.0);
  b.add_linear(2, -4.0);
  b.add_quadratic(0, 1, 3.0);
  b.add_quadratic(0, 2, 5.0);
  b.add_quadratic(1, 2, 7.0);
  const QuboProblem q = b.build();
  const QuboState qs(q, Bits{0, 1, 1});
  const std::vector<std::uint32_t> chosen{0};
  const SubQubo sq = clamp(qs, chosen);
  EXPECT_DOUBLE_EQ(sq.problem.linear(0), 1.0 + 3.0 + 5.0);
  EXPECT_DOUBLE_EQ(sq.problem.constant(), 2.0 - 4.0 + 7.0);
}

TEST(Clamp, SubstitutionEquivalence) {
  Rng rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 4 + trial % 9;
    const QuboProblem q = random_qubo(n, 6, 0.5, rng);
    Bits bits(n);
    for (auto& x : bits) x = rng() & 1u;
    const QuboState qs(q, bits);
    for (std::uint64_t set = 1; set < (std::uint64_t{1} << n); ++set) {
      if (__builtin_popcountll(set) > 4) continue;
      std::vector<std::uint32_t> chosen;
      for (std::uint32_t i = 0; i < n; ++i) {
        if ((set >> i) & 1u) chosen.push_back(i);
      }
      const SubQubo sq = clamp(qs, chosen);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << chosen.size()); ++mask) {
        const Bits local = bits_of(mask, chosen.size());
        Bits full = bits;
        for (std::size_t a = 0; a < chosen.size(); ++a) full[chosen[a]] = local[a];
        ASSERT_DOUBLE_EQ(qubo_energy(sq.problem, local), qubo_energy(q, full));
      }
    }
  }
}

TEST(Clamp, RejectsBadIndices) {
  Rng rng(3);
  const QuboProblem q = random_qubo(4, 3, 0.5, rng);
  const QuboState qs(q, Bits(4, 0));
  EXPECT_THROW((void)clamp(qs, std::vector<std::uint32_t>{0, 0}), std::invalid_argument);
  EXPECT_THROW((void)clamp(qs, std::vector<std::uint32_t>{4}), std::invalid_argument);
}

TEST(QuboState, DeltasTrackFlips) {
  Rng rng(4);
  const QuboProblem q = random_qubo(15, 7, 0.4, rng);
  QuboState qs(q, Bits(15, 0));
  std::uniform_int_distribution<std::size_t> pick(0, 14);
  for (int i = 0; i < 200; ++i) {
    qs.flip(pick(rng));
    ASSERT_DOUBLE_EQ(qs.energy(), qubo_energy(q, qs.bits()));
    for (std::size_t v = 0; v < 15; ++v) {
      ASSERT_DOUBLE_EQ(qs.flip_delta(v), qubo_flip_delta(q, qs.bits(), v));
    }
  }
}

TEST(SubQuboSelect, EnergyOrderSurvivesNoise) {
  QuboBuilder b(3);
  b.add_linear(0, -3.0);
  b.add_linear(1, -1.0);
  b.add_linear(2, 2.0);
  const QuboProblem q = b.build();
  const QuboState qs(q, Bits(3, 0));
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) EXPECT_EQ(subqubo_select_energy(qs, 1, rng)[0], 0u);
  EXPECT_EQ(subqubo_select_energy(qs, 3, rng).size(), 3u);
  EXPECT_THROW((void)subqubo_select_energy(qs, 4, rng), std::invalid_argument);
}

TEST(SubQuboSelect, NoiseBreaksTiesUniformly) {
  QuboBuilder b(5);
  const QuboProblem q = b.build();
  const QuboState qs(q, Bits(5, 0));
  Rng rng(6);
  std::vector<int> counts(5, 0);
  const int trials = 10000;
  for (int i = 0; i < trials; ++i) ++counts[subqubo_select_energy(qs, 1, rng)[0]];
  const double sigma = std::sqrt(trials * 0.2 * 0.8);
  for (int c : counts) EXPECT_NEAR(c, trials * 0.2, 3 * sigma);
}

TEST(SubQuboSelect, RandomIsUniform) {
  QuboBuilder b(10);
  const QuboProblem q = b.build();
  const QuboState qs(q, Bits(10, 0));
  Rng rng(7);
  std::vector<int> counts(10, 0);
  for (int i = 0; i < 10000; ++i) ++counts[subqubo_select_random(qs, 1, rng)[0]];
  const double sigma = std::sqrt(10000 * 0.1 * 0.9);
  for (int c : counts) EXPECT_NEAR(c, 1000, 3 * sigma);
  EXPECT_EQ(subqubo_select_random(qs, 10, rng).size(), 10u);
}

TEST(SubQuboSolve, TraceInvariants) {
  const CnfFormula f = generate_random_ksat(40, 170, 3, 8);
  const std::size_t size = 40 + count_aux_clauses(f);
  for (SubQuboSelector sel : {SubQuboSelector::kEnergy, SubQuboSelector::kRandom}) {
    for (std::size_t q : {std::size_t{20}, size}) {
      SubQuboConfig c;
      c.selector = sel;
      c.q = q;
      c.max_iters = 30;
      c.conv = 6;
      c.tabu_steps_per_var = 20;
      c.seed = 3;
      const RunTrace t = subqubo_solve(f, c);
      EXPECT_LE(t.iterations_run, 30u);
      EXPECT_EQ(t.best_energy, energy_of(f, t.best_assignment));
      double prev = 1e300;
      int prev_best = t.initial_energy;
      for (const IterationRecord& r : t.iterations) {
        ASSERT_TRUE(r.qubo_objective.has_value());
        EXPECT_LE(*r.qubo_objective, prev);
        EXPECT_LE(r.energy, *r.qubo_objective);
        EXPECT_LE(r.best_energy, prev_best);
        EXPECT_EQ(r.q, q);
        prev = *r.qubo_objective;
        prev_best = r.best_energy;
      }
      const RunTrace again = subqubo_solve(f, c);
      EXPECT_EQ(again.best_assignment, t.best_assignment);
    }
  }
}

TEST(SubQuboSolve, RejectsOversizedQ) {
  const CnfFormula f = generate_random_ksat(10, 20, 3, 9);
  SubQuboConfig c;
  c.q = 31;
  EXPECT_THROW((void)subqubo_solve(f, c), ConfigError);
  c.q = 0;
  EXPECT_THROW((void)subqubo_solve(f, c), ConfigError);
  EXPECT_EQ(parse_subqubo_selector("energy"), SubQuboSelector::kEnergy);
  EXPECT_THROW((void)parse_subqubo_selector("graph"), std::invalid_argument);
}
