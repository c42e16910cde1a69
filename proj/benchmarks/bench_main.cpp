#include <benchmark/benchmark.h>

#include <numeric>

#include "subsat/sat_state.hpp"
#include "subsat/sat_to_qubo.hpp"
#include "subsat/selectors.hpp"
#include "subsat/subproblem.hpp"
#include "subsat/tabu.hpp"
#include "subsat/walksat.hpp"

using namespace subsat;

namespace {

CnfFormula instance(std::size_t n) { return generate_random_ksat(n, 4 * n, 3, 1); }

std::vector<Var> first_vars(std::size_t m) {
  std::vector<Var> vars(m);
  std::iota(vars.begin(), vars.end(), 0u);
  return vars;
}

void BM_Flip(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const CnfFormula f = instance(n);
  Rng rng(1);
  SatState s(f, random_assignment(n, rng));
  std::uniform_int_distribution<Var> pick(0, static_cast<Var>(n - 1));
  for (auto _ : st) {
    s.flip(pick(rng));
    benchmark::DoNotOptimize(s.energy());
  }
  st.SetItemsProcessed(st.iterations());
}
BENCHMARK(BM_Flip)->Arg(100)->Arg(500)->Arg(5000);

void BM_Select(benchmark::State& st) {
  const CnfFormula f = instance(500);
  Rng rng(2);
  const SatState s(f, random_assignment(500, rng));
  SelectorConfig cfg;
  cfg.kind = static_cast<SelectorKind>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(select_variables(cfg, s, 75, rng));
  st.SetLabel(to_string(cfg.kind));
}
BENCHMARK(BM_Select)->DenseRange(0, 3);

void BM_BuildAndConvert(benchmark::State& st) {
  const CnfFormula f = instance(500);
  Rng rng(3);
  const SatState s(f, random_assignment(500, rng));
  const auto vars = first_vars(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) {
    const SubProblem sub = build_subproblem(s, vars);
    benchmark::DoNotOptimize(subsat_to_qubo(sub));
  }
}
BENCHMARK(BM_BuildAndConvert)->Arg(25)->Arg(75)->Arg(200);

void BM_Tabu(benchmark::State& st) {
  const auto m = static_cast<std::size_t>(st.range(0));
  const CnfFormula f = instance(500);
  Rng rng(4);
  const SatState s(f, random_assignment(500, rng));
  const SubProblem sub = build_subproblem(s, first_vars(m));
  const QuboProblem q = subsat_to_qubo(sub);
  const Bits init = encode_assignment(sub.formula, q, sub.base_state);
  const TabuParams p = default_tabu_params(q.size(), 5, 20);
  for (auto _ : st) benchmark::DoNotOptimize(tabu_search(q, init, p));
  st.counters["Q"] = static_cast<double>(q.size());
}
BENCHMARK(BM_Tabu)->Arg(25)->Arg(75)->Unit(benchmark::kMillisecond);

void BM_WalkSat(benchmark::State& st) {
  const CnfFormula f = instance(500);
  Rng rng(5);
  const SatState s(f, random_assignment(500, rng));
  const SubProblem sub = build_subproblem(s, first_vars(75));
  WalkSatParams p;
  p.max_flips = 20 * 75;
  for (auto _ : st) benchmark::DoNotOptimize(walksat_optimize(sub, p, rng));
}
BENCHMARK(BM_WalkSat)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
