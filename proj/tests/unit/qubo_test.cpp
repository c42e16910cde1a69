#include <gtest/gtest.h>

#include <sstream>

#include "helpers.hpp"
#include "subsat/qubo.hpp"
#include "subsat/sat_state.hpp"
#include "subsat/sat_to_qubo.hpp"
#include "subsat/selectors.hpp"
#include "subsat/subproblem.hpp"
#include "subsat/tabu.hpp"

using namespace subsat;
using namespace subsat::testing;

namespace {

double dense_energy(const std::vector<std::vector<double>>& m, double c, const Bits& b) {
  double e = c;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) e += m[i][j] * b[i] * b[j];
  }
  return e;
}

double min_over_aux(const QuboProblem& q, const Assignment& x) {
  std::vector<std::size_t> aux;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q.roles()[i].role == QuboRole::kAux) aux.push_back(i);
  }
  Bits b(q.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) b[i] = x[i];
  double best = 1e300;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << aux.size()); ++mask) {
    for (std::size_t a = 0; a < aux.size(); ++a) b[aux[a]] = (mask >> a) & 1u;
    best = std::min(best, qubo_energy(q, b));
  }
  return best;
}

}  // namespace

TEST(QuboBuilder, FoldsDiagonalAndDropsZeros) {
  QuboBuilder b(3);
  b.add_constant(2.0);
  b.add_linear(0, 1.0);
  b.add_quadratic(1, 1, 4.0);
  b.add_quadratic(2, 0, 3.0);
  b.add_quadratic(0, 2, -3.0);
  b.add_quadratic(1, 2, 5.0);
  const QuboProblem q = b.build();
  EXPECT_EQ(q.size(), 3u);
  EXPECT_DOUBLE_EQ(q.constant(), 2.0);
  EXPECT_DOUBLE_EQ(q.linear(1), 4.0);
  ASSERT_EQ(q.quadratic().size(), 1u);
  EXPECT_EQ(q.quadratic()[0], (QuboTerm{1, 2, 5.0}));
  EXPECT_EQ(q.nonzeros(), 3u);
  EXPECT_THROW(b.add_linear(3, 1.0), std::out_of_range);
}

TEST(QuboEnergy, ZeroBitsGiveConstant) {
  Rng rng(1);
  const QuboProblem q = random_qubo(10, 5, 0.5, rng);
  EXPECT_DOUBLE_EQ(qubo_energy(q, Bits(10, 0)), q.constant());
  EXPECT_THROW((void)qubo_energy(q, Bits(9, 0)), std::invalid_argument);
}

TEST(QuboEnergy, MatchesDenseOracle) {
  Rng rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 20;
    const QuboProblem q = random_qubo(n, 9, 0.4, rng);
    std::vector<std::vector<double>> dense(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) dense[i][i] = q.linear(i);
    for (const QuboTerm& t : q.quadratic()) dense[t.i][t.j] += t.coeff;
    for (int s = 0; s < 20; ++s) {
      Bits b(n);
      for (auto& x : b) x = rng() & 1u;
      EXPECT_DOUBLE_EQ(qubo_energy(q, b), dense_energy(dense, q.constant(), b));
      for (std::size_t i = 0; i < n; ++i) {
        Bits c = b;
        c[i] ^= 1;
        EXPECT_DOUBLE_EQ(qubo_flip_delta(q, b, i), qubo_energy(q, c) - qubo_energy(q, b));
      }
    }
  }
}

TEST(QuboIo, RoundTrip) {
  Rng rng(3);
  const QuboProblem q = random_qubo(12, 7, 0.3, rng);
  std::stringstream ss;
  write_qubo(q, ss);
  const QuboProblem r = read_qubo(ss);
  ASSERT_EQ(r.size(), q.size());
  EXPECT_DOUBLE_EQ(r.constant(), q.constant());
  for (std::size_t i = 0; i < q.size(); ++i) EXPECT_DOUBLE_EQ(r.linear(i), q.linear(i));
  EXPECT_TRUE(std::equal(r.quadratic().begin(), r.quadratic().end(), q.quadratic().begin(),
                         q.quadratic().end()));
}

TEST(QuboIo, HeaderFormat) {
  QuboBuilder b(2);
  b.add_constant(1.5);
  b.add_linear(0, -1);
  b.add_quadratic(0, 1, 2);
  std::stringstream ss;
  write_qubo(b.build(), ss);
  std::string header;
  std::getline(ss, header);
  EXPECT_EQ(header, "q 2 2 1.5");
  std::stringstream bad("q 2 1 0\n0 5 1\n");
  EXPECT_THROW((void)read_qubo(bad), std::invalid_argument);
}

TEST(Encoding, ThreeLiteralClauseTable) {
  const CnfFormula f(3, {{pos(0), pos(1), pos(2)}});
  const QuboProblem q = cnf_to_qubo(f);
  ASSERT_EQ(q.size(), 4u);
  EXPECT_EQ(q.roles()[3], (QuboVarTag{QuboRole::kAux, 0}));
  auto e = [&](int a, int b, int c, int w) {
    return qubo_energy(q, Bits{std::uint8_t(a), std::uint8_t(b), std::uint8_t(c), std::uint8_t(w)});
  };
  EXPECT_DOUBLE_EQ(std::min(e(0, 0, 0, 0), e(0, 0, 0, 1)), 1.0);
  EXPECT_DOUBLE_EQ(e(0, 0, 0, 0), 1.0);
  EXPECT_DOUBLE_EQ(std::min(e(1, 1, 1, 0), e(1, 1, 1, 1)), 0.0);
  EXPECT_DOUBLE_EQ(e(1, 1, 1, 1), 0.0);
  EXPECT_DOUBLE_EQ(e(1, 1, 0, 0), 0.0);
  EXPECT_DOUBLE_EQ(e(1, 1, 0, 1), 0.0);
  EXPECT_DOUBLE_EQ(e(1, 0, 0, 0), 0.0);
}

TEST(Encoding, NegativeUnitClause) {
  const QuboProblem q = cnf_to_qubo(CnfFormula(1, {{neg(0)}}));
  ASSERT_EQ(q.size(), 1u);
  EXPECT_TRUE(q.quadratic().empty());
  EXPECT_DOUBLE_EQ(qubo_energy(q, Bits{0}), 0.0);
  EXPECT_DOUBLE_EQ(qubo_energy(q, Bits{1}), 1.0);
}

TEST(Encoding, EveryClausePatternTruthTable) {
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::uint64_t polarity = 0; polarity < (std::uint64_t{1} << k); ++polarity) {
      std::vector<Literal> clause;
      for (std::size_t i = 0; i < k; ++i) clause.push_back({Var(i), ((polarity >> i) & 1u) != 0});
      const CnfFormula f(k, {clause});
      const QuboProblem q = cnf_to_qubo(f);
      EXPECT_EQ(q.size(), k + (k == 3 ? 1 : 0));
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        const Assignment x = bits_of(mask, k);
        EXPECT_DOUBLE_EQ(min_over_aux(q, x), clause_satisfied(f.clause(0), x) ? 0.0 : 1.0);
        const Bits enc = encode_assignment(f, q, x);
        EXPECT_DOUBLE_EQ(qubo_energy(q, enc), min_over_aux(q, x));
      }
    }
  }
}

TEST(Encoding, CoefficientsAreIntegral) {
  Rng rng(4);
  const QuboProblem q = cnf_to_qubo(random_mixed_formula(20, 80, 3, rng));
  EXPECT_EQ(q.constant(), std::round(q.constant()));
  for (double c : q.linear()) EXPECT_EQ(c, std::round(c));
  for (const QuboTerm& t : q.quadratic()) EXPECT_EQ(t.coeff, std::round(t.coeff));
}

TEST(Encoding, SubproblemMinOverAuxEqualsSubEnergy) {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const CnfFormula f = random_mixed_formula(16, 50, 3, rng);
    const SatState s(f, random_assignment(16, rng));
    const std::size_t m = 1 + trial % 8;
    const SubProblem sub = build_subproblem(s, select_random(s, m, rng));
    if (sub.formula.num_clauses() > 10) continue;
    const QuboProblem q = subsat_to_qubo(sub);
    EXPECT_EQ(q.size(), m + count_aux_clauses(sub.formula));
    EXPECT_LE(q.size(), m + sub.formula.num_clauses());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      const Assignment x = bits_of(mask, m);
      ASSERT_DOUBLE_EQ(min_over_aux(q, x), sub_energy(sub, x));
    }
  }
}

TEST(Encoding, SandwichBound) {
  Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const CnfFormula f = random_mixed_formula(5, 6, 3, rng);
    const QuboProblem q = cnf_to_qubo(f);
    ASSERT_LE(q.size(), 12u);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << q.size()); ++mask) {
      const Bits b = bits_of(mask, q.size());
      EXPECT_LE(energy_of(f, decode_bits(q, b, 5)), qubo_energy(q, b));
    }
  }
}

TEST(Decode, Projection) {
  QuboBuilder b(3);
  b.set_roles({{QuboRole::kSatVar, 0}, {QuboRole::kAux, 0}, {QuboRole::kSatVar, 1}});
  const QuboProblem q = b.build();
  EXPECT_EQ(decode_bits(q, Bits{1, 0, 0}, 2), (Assignment{1, 0}));
  EXPECT_THROW((void)decode_bits(q, Bits{1, 0, 0}, 3), std::invalid_argument);
  EXPECT_THROW((void)decode_bits(q, Bits{1, 0}, 2), std::invalid_argument);
}

TEST(Decode, EncodeRoundTrip) {
  Rng rng(7);
  const CnfFormula f = generate_random_ksat(30, 120, 3, 7);
  const QuboProblem q = cnf_to_qubo(f);
  for (int i = 0; i < 20; ++i) {
    const Assignment x = random_assignment(30, rng);
    const Bits b = encode_assignment(f, q, x);
    EXPECT_EQ(decode_bits(q, b, 30), x);
    EXPECT_DOUBLE_EQ(qubo_energy(q, b), energy_of(f, x));
  }
}

TEST(Tabu, SingleVariableDescent) {
  QuboBuilder b(1);
  b.add_linear(0, 5.0);
  const QuboSolution sol = tabu_search(b.build(), Bits{1}, TabuParams{});
  EXPECT_EQ(sol.bits, Bits{0});
  EXPECT_DOUBLE_EQ(sol.objective, 0.0);
}

TEST(Tabu, EmptyProblem) {
  QuboBuilder b(0);
  b.add_constant(3.0);
  const QuboSolution sol = tabu_search(b.build(), Bits{}, TabuParams{});
  EXPECT_TRUE(sol.bits.empty());
  EXPECT_DOUBLE_EQ(sol.objective, 3.0);
}

TEST(Tabu, ObjectiveIsExactAndNeverWorseThanInit) {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 30;
    const QuboProblem q = random_qubo(n, 10, 0.3, rng);
    Bits init(n);
    for (auto& x : init) x = rng() & 1u;
    TabuParams p = default_tabu_params(n, rng(), 20);
    p.restarts = 1 + trial % 3;
    const QuboSolution sol = tabu_search(q, init, p);
    EXPECT_EQ(sol.objective, qubo_energy(q, sol.bits));
    EXPECT_LE(sol.objective, qubo_energy(q, init));
  }
}

TEST(Tabu, IncrementalDeltasVerified) {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3 + trial % 18;
    const QuboProblem q = random_qubo(n, 6, 0.5, rng);
    TabuParams p = default_tabu_params(n, trial, 30);
    p.restarts = 2;
    p.verify_deltas = true;
    EXPECT_NO_THROW((void)tabu_search(q, Bits(n, 0), p));
  }
}

TEST(Tabu, FindsOptimumOfSmallProblems) {
  Rng rng(10);
  int hits = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 4 + trial % 9;
    const QuboProblem q = random_qubo(n, 10, 0.5, rng);
    TabuParams p = default_tabu_params(n, trial, 50);
    p.restarts = 4;
    hits += tabu_search(q, Bits(n, 0), p).objective == brute_force_qubo_min(q);
  }
  EXPECT_GE(hits, 48);
}

TEST(Tabu, DeterministicForSeed) {
  Rng rng(11);
  const QuboProblem q = random_qubo(25, 8, 0.3, rng);
  TabuParams p = default_tabu_params(25, 42, 40);
  p.restarts = 3;
  const QuboSolution a = tabu_search(q, Bits(25, 1), p);
  const QuboSolution b = tabu_search(q, Bits(25, 1), p);
  EXPECT_EQ(a.bits, b.bits);
  EXPECT_EQ(a.objective, b.objective);
}

TEST(Tabu, DefaultParameters) {
  EXPECT_EQ(default_tabu_params(8, 0).tenure, 4u);
  EXPECT_EQ(default_tabu_params(40, 0).tenure, 10u);
  EXPECT_EQ(default_tabu_params(400, 0).tenure, 20u);
  EXPECT_EQ(default_tabu_params(40, 0).max_steps, 4000u);
  EXPECT_EQ(default_tabu_params(40, 0, 7).max_steps, 280u);
  EXPECT_EQ(default_tabu_params(40, 0).restarts, 1u);
}

TEST(Tabu, TenureLargerThanProblemStillMoves) {
  QuboBuilder b(2);
  b.add_linear(0, -1.0);
  b.add_linear(1, -1.0);
  b.add_quadratic(0, 1, 3.0);
  TabuParams p;
  p.tenure = 20;
  p.max_steps = 50;
  const QuboSolution sol = tabu_search(b.build(), Bits{1, 1}, p);
  EXPECT_DOUBLE_EQ(sol.objective, -1.0);
}

TEST(Tabu, RestartsStartWithOptimalAuxiliaryBits) {
  // All-positive clauses make x = 0 the worst start, so restarts win.
  Rng rng(2);
  std::uniform_int_distribution<Var> var(0, 11);
  std::vector<std::vector<Literal>> clauses;
  while (clauses.size() < 40) {
    const Var a = var(rng), b = var(rng), c = var(rng);
    if (a != b && b != c && a != c) clauses.push_back({pos(a), pos(b), pos(c)});
  }
  const CnfFormula f(12, clauses);
  const QuboProblem q = cnf_to_qubo(f);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    TabuParams p;
    p.max_steps = 0;
    p.restarts = 50;
    p.seed = seed;
    const Assignment x(12, 0);
    const QuboSolution sol = tabu_search(q, encode_assignment(f, q, x), p);
    // With no steps the answer is one of the start points, each of which
    // must price its x exactly.
    EXPECT_DOUBLE_EQ(sol.objective, energy_of(f, decode_bits(q, sol.bits, 12)));
  }
}
