// subsat command-line front end: generate, solve, experiment, calibrate, verify.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "subsat/dimacs.hpp"
#include "subsat/experiment.hpp"
#include "subsat/qubo_inner.hpp"
#include "subsat/solver.hpp"
#include "subsat/subqubo.hpp"
#include "subsat/trace_csv.hpp"

namespace fs = std::filesystem;
using namespace subsat;

namespace {

enum ExitCode : int { kOk = 0, kIoError = 1, kParseError = 2, kConfigError = 3, kMismatch = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CnfFormula read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return parse_dimacs(in);
}

void write_file(const fs::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text) || !out.flush()) throw IoError("cannot write '" + path.string() + "'");
}

struct GenerateOpts {
  std::size_t n = 100;
  std::size_t l = 400;
  std::size_t k = 3;
  std::size_t count = 1;
  std::uint64_t seed = 1;
  std::string out_dir = ".";
};

int run_generate(const GenerateOpts& o) {
  std::vector<std::pair<fs::path, std::string>> files;
  for (std::size_t i = 0; i < o.count; ++i) {
    const std::uint64_t seed = o.seed + i;
    files.emplace_back(fs::path(o.out_dir) / instance_file_name(o.n, o.l, o.k, seed),
                       serialize_dimacs(generate_random_ksat(o.n, o.l, o.k, seed), seed));
  }
  std::error_code ec;
  fs::create_directories(o.out_dir, ec);
  for (const auto& [path, text] : files) write_file(path, text);
  std::cout << "wrote " << files.size() << " instances to " << o.out_dir << "\n";
  return kOk;
}

struct SolveOpts {
  std::string instance;
  std::string method = "subsat";
  std::string selector = "energy";
  std::string inner = "walksat";
  std::string heuristic = "break";
  std::string subqubo_selector = "random";
  std::string sizing = "on";
  std::string trace;
  SolverConfig cfg;
  std::size_t q = 250;
};

int run_solve(SolveOpts o) {
  const CnfFormula formula = read_instance(o.instance);
  RunTrace trace;
  try {
    if (o.method == "subqubo") {
      SubQuboConfig sc;
      sc.selector = parse_subqubo_selector(o.subqubo_selector);
      sc.q = o.q;
      sc.max_iters = o.cfg.max_iters;
      sc.conv = o.cfg.conv;
      sc.seed = o.cfg.seed;
      sc.tabu_tenure = o.cfg.tabu_tenure;
      sc.tabu_steps_per_var = o.cfg.tabu_steps_per_var;
      sc.tabu_restarts = o.cfg.tabu_restarts;
      trace = subqubo_solve(formula, sc);
    } else if (o.method == "subsat") {
      o.cfg.selector.kind = parse_selector_kind(o.selector);
      o.cfg.inner = parse_inner_kind(o.inner);
      o.cfg.walksat_heuristic = parse_walksat_heuristic(o.heuristic);
      o.cfg.sizing = o.sizing == "on";
      trace = solve(formula, o.cfg);
    } else {
      throw ConfigError("unknown method '" + o.method + "'");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  std::ostringstream csv_text;
  write_trace_csv(trace, csv_text);
  if (!o.trace.empty()) write_file(o.trace, csv_text.str());
  std::cout << "final_energy=" << trace.best_energy << " initial_energy=" << trace.initial_energy
            << " iterations=" << trace.iterations_run
            << " stop_reason=" << to_string(trace.stop_reason) << "\n";
  return kOk;
}

struct ExperimentOpts {
  std::string spec;
  std::string runs;
  std::string summary;
  std::size_t threads = 0;
  bool quiet = false;
};

int run_experiment(const ExperimentOpts& o) {
  std::ifstream in(o.spec);
  if (!in) throw IoError("cannot open '" + o.spec + "'");
  ExperimentSpec spec = parse_experiment_spec(in, fs::path(o.spec).parent_path());
  if (!o.runs.empty()) spec.runs_path = o.runs;
  if (!o.summary.empty()) spec.summary_path = o.summary;
  if (o.threads > 0) spec.threads = o.threads;

  const std::vector<Instance> instances = load_instances(spec);
  const std::vector<RunJob> jobs = expand_grid(spec, instances);
  if (!o.quiet) {
    std::cerr << instances.size() << " instances, " << jobs.size() << " runs, " << spec.threads
              << " threads\n";
  }
  ProgressFn progress;
  if (!o.quiet) {
    progress = [](std::size_t done, std::size_t total) {
      if (done == total || done % 10 == 0) std::cerr << "\r" << done << "/" << total << std::flush;
    };
  }
  const std::vector<RunRow> rows = run_jobs(jobs, instances, spec.threads, progress);
  if (!o.quiet) std::cerr << "\n";

  std::ostringstream runs_text;
  std::ostringstream summary_text;
  write_runs_csv(rows, runs_text);
  const std::vector<SummaryRow> summary = summarize(rows);
  write_summary_csv(summary, summary_text);
  write_file(spec.runs_path, runs_text.str());
  write_file(spec.summary_path, summary_text.str());
  std::cout << summary_text.str();
  return kOk;
}

struct CalibrateOpts {
  std::string instance;
  std::size_t q_max = 200;
  std::string selector = "energy";
  std::uint64_t seed = 0;
  std::size_t probes = 30;
};

int run_calibrate(const CalibrateOpts& o) {
  const CnfFormula formula = read_instance(o.instance);
  SelectorConfig sel;
  try {
    sel.kind = parse_selector_kind(o.selector);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (o.q_max < 2) throw ConfigError("q_max must be >= 2");
  if (o.probes < 1) throw ConfigError("probes must be >= 1");
  Rng rng(o.seed);
  const SatState state(formula, random_assignment(formula.num_variables(), rng));
  const CalibrationReport rep = calibrate_sizing(state, o.q_max, sel, rng, o.probes);
  const SizingModel& model = rep.fit.model;

  static const char* const names[kSizingFeatures] = {"w_qubo_size", "w_max_width", "w_literals",
                                                     "w_variables", "w_clauses"};
  double max_residual = 0.0;
  for (double r : rep.fit.residuals) max_residual = std::max(max_residual, std::abs(r));
  std::cout << "samples=" << rep.samples.size() << "\n";
  std::cout << "trained=" << (model.trained() ? 1 : 0) << "\n";
  std::cout << "intercept=" << csv::format_number(model.intercept()) << "\n";
  for (std::size_t i = 0; i < kSizingFeatures; ++i) {
    std::cout << names[i] << "=" << csv::format_number(model.weights()[i]) << "\n";
  }
  std::cout << "mean_abs_error=" << csv::format_number(rep.fit.mean_abs_error) << "\n";
  std::cout << "max_abs_residual=" << csv::format_number(max_residual) << "\n";
  std::cout << "q_max=" << o.q_max << "\n";
  std::cout << "proposed_m="
            << model.propose(sizing_features(formula, static_cast<double>(o.q_max)),
                             formula.num_variables())
            << "\n";
  return kOk;
}

struct VerifyOpts {
  std::string runs;
  std::string summary;
};

int run_verify(const VerifyOpts& o) {
  std::ifstream runs(o.runs);
  if (!runs) throw IoError("cannot open '" + o.runs + "'");
  std::ifstream summary(o.summary);
  if (!summary) throw IoError("cannot open '" + o.summary + "'");
  VerifyReport rep;
  try {
    rep = verify_summary(runs, summary);
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  }
  for (const std::string& m : rep.mismatches) std::cerr << m << "\n";
  std::cout << "groups=" << rep.groups << " mismatches=" << rep.mismatches.size() << "\n";
  return rep.ok() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Max-SAT by sub-SAT decomposition"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  GenerateOpts gen;
  auto* g = app.add_subcommand("generate", "write random k-SAT instances in DIMACS format");
  g->add_option("-n,--variables", gen.n, "variables per instance")->required();
  g->add_option("-l,--clauses", gen.l, "clauses per instance")->required();
  g->add_option("-k,--width", gen.k, "literals per clause (1-3)");
  g->add_option("-c,--count", gen.count, "number of instances");
  g->add_option("-s,--seed", gen.seed, "seed of the first instance");
  g->add_option("-o,--out-dir", gen.out_dir, "output directory");

  SolveOpts so;
  auto* s = app.add_subcommand("solve", "run one seeded solve and write its trace CSV");
  s->add_option("instance", so.instance, "DIMACS CNF file")->required();
  s->add_option("--method", so.method, "subsat or subqubo");
  s->add_option("--selector", so.selector, "random, energy, softmax or graph");
  s->add_option("--inner", so.inner, "walksat, exact or qubo");
  s->add_option("-m,--m,--q-max", so.cfg.m, "sub-SAT size M, or q_max for the qubo inner");
  s->add_option("--q", so.q, "sub-QUBO size for --method subqubo");
  s->add_option("--subqubo-selector", so.subqubo_selector, "energy or random");
  s->add_option("--max-iters", so.cfg.max_iters);
  s->add_option("--conv", so.cfg.conv, "stop after this many iterations without improvement");
  s->add_option("--seed", so.cfg.seed);
  s->add_option("--graph-exponent", so.cfg.selector.graph_exponent, "edge weight n^e");
  s->add_option("--graph-swap-budget", so.cfg.selector.graph_swap_budget, "0 picks the default");
  s->add_option("-p,--walksat-noise", so.cfg.walksat_noise);
  s->add_option("--walksat-flips-per-var", so.cfg.walksat_flips_per_var);
  s->add_option("--walksat-heuristic", so.heuristic, "break, make or energy");
  s->add_option("--exact-node-budget", so.cfg.exact_node_budget);
  s->add_option("--exact-max-vars", so.cfg.exact_max_vars);
  s->add_option("--tabu-tenure", so.cfg.tabu_tenure, "0 picks clamp(Q/4, 4, 20)");
  s->add_option("--tabu-steps-per-var", so.cfg.tabu_steps_per_var);
  s->add_option("--tabu-restarts", so.cfg.tabu_restarts);
  s->add_option("--sizing", so.sizing, "on or off")->check(CLI::IsMember({"on", "off"}));
  s->add_option("--slack-threshold", so.cfg.slack_threshold);
  s->add_option("-t,--trace", so.trace, "trace CSV output path");

  ExperimentOpts eo;
  auto* e = app.add_subcommand("experiment", "run a spec-file grid and write run/summary CSVs");
  e->add_option("spec", eo.spec, "experiment spec file")->required();
  e->add_option("--runs", eo.runs, "override the per-run CSV path");
  e->add_option("--summary", eo.summary, "override the summary CSV path");
  e->add_option("-j,--threads", eo.threads, "override the worker count");
  e->add_flag("-q,--quiet", eo.quiet);

  CalibrateOpts co;
  auto* c = app.add_subcommand("calibrate", "fit the sizing model on one instance");
  c->add_option("instance", co.instance, "DIMACS CNF file")->required();
  c->add_option("--q-max", co.q_max);
  c->add_option("--selector", co.selector);
  c->add_option("--seed", co.seed);
  c->add_option("--probes", co.probes);

  VerifyOpts vo;
  auto* v = app.add_subcommand("verify", "recompute a summary CSV from its per-run CSV");
  v->add_option("runs", vo.runs, "per-run CSV")->required();
  v->add_option("summary", vo.summary, "summary CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kConfigError;
  }

  try {
    if (*g) return run_generate(gen);
    if (*s) return run_solve(so);
    if (*e) return run_experiment(eo);
    if (*c) return run_calibrate(co);
    if (*v) return run_verify(vo);
  } catch (const IoError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kIoError;
  } catch (const DimacsError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return kParseError;
  } catch (const SpecError& err) {
    std::cerr << "spec error: " << err.what() << "\n";
    return kParseError;
  } catch (const ConfigError& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return kConfigError;
  } catch (const std::invalid_argument& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return kConfigError;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kIoError;
  }
  return kOk;
}
