#include "subsat/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "subsat/dimacs.hpp"
#include "subsat/exact_bnb.hpp"
#include "subsat/sat_to_qubo.hpp"
#include "subsat/walksat.hpp"

namespace subsat {

SpecError::SpecError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::string to_string(Baseline b) {
  switch (b) {
    case Baseline::kFullQubo: return "full_qubo";
    case Baseline::kWalkSatBreak: return "walksat_break";
    case Baseline::kWalkSatMake: return "walksat_make";
    case Baseline::kWalkSatEnergy: return "walksat_energy";
    case Baseline::kExact: return "exact";
  }
  return "unknown";
}

Baseline parse_baseline(const std::string& name) {
  for (Baseline b : {Baseline::kFullQubo, Baseline::kWalkSatBreak, Baseline::kWalkSatMake,
                     Baseline::kWalkSatEnergy, Baseline::kExact}) {
    if (to_string(b) == name) return b;
  }
  throw std::invalid_argument("unknown baseline '" + name + "'");
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <typename T>
T parse_number(const std::string& text, std::size_t line, const std::string& key) {
  T value{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw SpecError(line, "bad value '" + text + "' for '" + key + "'");
  }
  return value;
}

std::size_t parse_size(const std::string& text, std::size_t line, const std::string& key) {
  return parse_number<std::size_t>(text, line, key);
}

double parse_double(const std::string& text, std::size_t line, const std::string& key) {
  return parse_number<double>(text, line, key);
}

bool parse_bool(const std::string& text, std::size_t line, const std::string& key) {
  if (text == "on" || text == "true" || text == "1" || text == "yes") return true;
  if (text == "off" || text == "false" || text == "0" || text == "no") return false;
  throw SpecError(line, "bad boolean '" + text + "' for '" + key + "'");
}

std::vector<std::size_t> parse_sizes(const std::string& value, std::size_t line,
                                     const std::string& key) {
  std::vector<std::size_t> out;
  for (const std::string& item : split_list(value)) out.push_back(parse_size(item, line, key));
  return out;
}

/// "1,2,5" or "1-10" or a mix of both.
std::vector<std::uint64_t> parse_seeds(const std::string& value, std::size_t line) {
  std::vector<std::uint64_t> out;
  for (const std::string& item : split_list(value)) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      out.push_back(parse_number<std::uint64_t>(item, line, "seeds"));
      continue;
    }
    const auto lo = parse_number<std::uint64_t>(trim(item.substr(0, dash)), line, "seeds");
    const auto hi = parse_number<std::uint64_t>(trim(item.substr(dash + 1)), line, "seeds");
    if (hi < lo) throw SpecError(line, "empty seed range '" + item + "'");
    for (std::uint64_t s = lo; s <= hi; ++s) out.push_back(s);
  }
  return out;
}

template <typename T, typename Parse>
std::vector<T> parse_names(const std::string& value, std::size_t line, Parse parse) {
  std::vector<T> out;
  for (const std::string& item : split_list(value)) {
    try {
      out.push_back(parse(item));
    } catch (const std::invalid_argument& e) {
      throw SpecError(line, e.what());
    }
  }
  return out;
}

void apply_instances_key(ExperimentSpec& spec, const std::string& key, const std::string& value,
                         std::size_t line, const std::filesystem::path& base_dir) {
  if (key == "generate") {
    for (const std::string& item : split_list(value)) {
      const auto x = item.find('x');
      if (x == std::string::npos) throw SpecError(line, "expected NxL, got '" + item + "'");
      spec.generated.push_back({parse_size(trim(item.substr(0, x)), line, key),
                                parse_size(trim(item.substr(x + 1)), line, key)});
    }
  } else if (key == "k") {
    spec.k = parse_size(value, line, key);
  } else if (key == "count") {
    spec.count = parse_size(value, line, key);
  } else if (key == "seed") {
    spec.instance_seed = parse_number<std::uint64_t>(value, line, key);
  } else if (key == "file" || key == "files") {
    for (const std::string& item : split_list(value)) {
      std::filesystem::path p(item);
      spec.files.push_back(p.is_relative() ? base_dir / p : p);
    }
  } else {
    throw SpecError(line, "unknown key '" + key + "' in [instances]");
  }
}

void apply_grid_key(ExperimentSpec& spec, const std::string& key, const std::string& value,
                    std::size_t line) {
  SolverConfig& b = spec.base;
  if (key == "selectors") {
    spec.selectors = parse_names<SelectorKind>(value, line, parse_selector_kind);
  } else if (key == "inners") {
    spec.inners = parse_names<InnerKind>(value, line, parse_inner_kind);
  } else if (key == "m") {
    spec.m_values = parse_sizes(value, line, key);
  } else if (key == "q") {
    spec.q_values = parse_sizes(value, line, key);
  } else if (key == "subqubo_selectors") {
    spec.subqubo_selectors = parse_names<SubQuboSelector>(value, line, parse_subqubo_selector);
  } else if (key == "subqubo_q") {
    spec.subqubo_q = parse_sizes(value, line, key);
  } else if (key == "baselines") {
    spec.baselines = parse_names<Baseline>(value, line, parse_baseline);
  } else if (key == "seeds") {
    spec.seeds = parse_seeds(value, line);
  } else if (key == "max_iters") {
    b.max_iters = parse_size(value, line, key);
  } else if (key == "conv") {
    b.conv = parse_size(value, line, key);
  } else if (key == "graph_exponent") {
    b.selector.graph_exponent = parse_double(value, line, key);
  } else if (key == "graph_swap_budget") {
    b.selector.graph_swap_budget = parse_size(value, line, key);
  } else if (key == "walksat_noise") {
    b.walksat_noise = parse_double(value, line, key);
  } else if (key == "walksat_flips_per_var") {
    b.walksat_flips_per_var = parse_size(value, line, key);
  } else if (key == "walksat_heuristic") {
    try {
      b.walksat_heuristic = parse_walksat_heuristic(value);
    } catch (const std::invalid_argument& e) {
      throw SpecError(line, e.what());
    }
  } else if (key == "exact_node_budget") {
    b.exact_node_budget = parse_size(value, line, key);
  } else if (key == "exact_max_vars") {
    b.exact_max_vars = parse_size(value, line, key);
  } else if (key == "tabu_tenure") {
    b.tabu_tenure = parse_size(value, line, key);
  } else if (key == "tabu_steps_per_var") {
    b.tabu_steps_per_var = parse_size(value, line, key);
  } else if (key == "tabu_restarts") {
    b.tabu_restarts = parse_size(value, line, key);
  } else if (key == "sizing") {
    b.sizing = parse_bool(value, line, key);
  } else if (key == "slack_threshold") {
    b.slack_threshold = parse_double(value, line, key);
  } else if (key == "baseline_flips") {
    spec.baseline_flips = parse_size(value, line, key);
  } else if (key == "exact_max_n") {
    spec.exact_max_n = parse_size(value, line, key);
  } else if (key == "exact_baseline_budget") {
    spec.exact_baseline_budget = parse_size(value, line, key);
  } else {
    throw SpecError(line, "unknown key '" + key + "' in [grid]");
  }
}

void apply_output_key(ExperimentSpec& spec, const std::string& key, const std::string& value,
                      std::size_t line, const std::filesystem::path& base_dir) {
  if (key == "runs" || key == "summary") {
    std::filesystem::path p(value);
    if (p.is_relative()) p = base_dir / p;
    (key == "runs" ? spec.runs_path : spec.summary_path) = p;
  } else if (key == "threads") {
    spec.threads = parse_size(value, line, key);
    if (spec.threads < 1) throw SpecError(line, "threads must be >= 1");
  } else {
    throw SpecError(line, "unknown key '" + key + "' in [output]");
  }
}

}  // namespace

ExperimentSpec parse_experiment_spec(std::istream& in, const std::filesystem::path& base_dir) {
  ExperimentSpec spec;
  spec.runs_path = base_dir / "runs.csv";
  spec.summary_path = base_dir / "summary.csv";
  std::string section;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto comment = raw.find_first_of("#;");
    const std::string text = trim(std::string_view(raw).substr(0, comment));
    if (text.empty()) continue;
    if (text.front() == '[') {
      if (text.back() != ']') throw SpecError(line, "unterminated section header");
      section = trim(std::string_view(text).substr(1, text.size() - 2));
      if (section != "instances" && section != "grid" && section != "output") {
        throw SpecError(line, "unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw SpecError(line, "expected key = value");
    const std::string key = trim(std::string_view(text).substr(0, eq));
    const std::string value = trim(std::string_view(text).substr(eq + 1));
    if (key.empty()) throw SpecError(line, "empty key");
    if (section.empty()) throw SpecError(line, "key '" + key + "' outside any section");
    if (section == "instances") {
      apply_instances_key(spec, key, value, line, base_dir);
    } else if (section == "grid") {
      apply_grid_key(spec, key, value, line);
    } else {
      apply_output_key(spec, key, value, line, base_dir);
    }
  }
  return spec;
}

std::string instance_file_name(std::size_t n, std::size_t l, std::size_t k, std::uint64_t seed) {
  return "rand_n" + std::to_string(n) + "_l" + std::to_string(l) + "_k" + std::to_string(k) +
         "_s" + std::to_string(seed) + ".cnf";
}

std::string dataset_label(std::size_t n, std::size_t l, std::size_t k) {
  std::string label = std::to_string(n) + "v" + std::to_string(l) + "c";
  if (k != 3) label += "_k" + std::to_string(k);
  return label;
}

std::vector<Instance> load_instances(const ExperimentSpec& spec) {
  std::vector<Instance> out;
  for (const GeneratedSet& g : spec.generated) {
    for (std::size_t i = 0; i < spec.count; ++i) {
      const std::uint64_t seed = spec.instance_seed + i;
      std::string name = instance_file_name(g.n, g.l, spec.k, seed);
      name.resize(name.size() - 4);
      out.push_back({dataset_label(g.n, g.l, spec.k), std::move(name),
                     generate_random_ksat(g.n, g.l, spec.k, seed)});
    }
  }
  for (const std::filesystem::path& p : spec.files) {
    std::ifstream in(p);
    if (!in) throw std::runtime_error("cannot open '" + p.string() + "'");
    out.push_back({"files", p.stem().string(), parse_dimacs(in)});
  }
  return out;
}

std::vector<RunJob> expand_grid(const ExperimentSpec& spec, const std::vector<Instance>& instances) {
  if (instances.empty()) throw SpecError(0, "no instances");
  if (spec.seeds.empty()) throw SpecError(0, "no seeds");
  if (!spec.inners.empty() && spec.selectors.empty()) {
    throw SpecError(0, "inners given without selectors");
  }
  if (!spec.subqubo_q.empty() && spec.subqubo_selectors.empty()) {
    throw SpecError(0, "subqubo_q given without subqubo_selectors");
  }
  if (spec.inners.empty() && spec.subqubo_q.empty() && spec.baselines.empty()) {
    throw SpecError(0, "grid has no methods");
  }

  std::vector<RunJob> jobs;
  for (SelectorKind sel : spec.selectors) {
    for (InnerKind inner : spec.inners) {
      const auto& sizes = inner == InnerKind::kQuboTabu ? spec.q_values : spec.m_values;
      if (sizes.empty()) {
        throw SpecError(0, std::string(inner == InnerKind::kQuboTabu ? "q" : "m") +
                               " values missing for inner '" + to_string(inner) + "'");
      }
      for (std::size_t mq : sizes) {
        SolverConfig cfg = spec.base;
        cfg.selector.kind = sel;
        cfg.inner = inner;
        cfg.m = mq;
        for (const Instance& inst : instances) {
          try {
            validate(cfg, inst.formula);
          } catch (const ConfigError& e) {
            throw ConfigError(inst.name + " with " + to_string(sel) + "/" + to_string(inner) +
                              ": " + e.what());
          }
        }
        for (std::size_t i = 0; i < instances.size(); ++i) {
          for (std::uint64_t seed : spec.seeds) {
            RunJob job;
            job.instance = i;
            job.method = "subsat";
            job.selector = to_string(sel);
            job.inner = to_string(inner);
            job.mq = mq;
            job.seed = seed;
            job.solver = cfg;
            job.solver.seed = seed;
            jobs.push_back(std::move(job));
          }
        }
      }
    }
  }

  for (SubQuboSelector sel : spec.subqubo_selectors) {
    for (std::size_t q : spec.subqubo_q) {
      SubQuboConfig cfg;
      cfg.selector = sel;
      cfg.q = q;
      cfg.max_iters = spec.base.max_iters;
      cfg.conv = spec.base.conv;
      cfg.tabu_tenure = spec.base.tabu_tenure;
      cfg.tabu_steps_per_var = spec.base.tabu_steps_per_var;
      cfg.tabu_restarts = spec.base.tabu_restarts;
      if (cfg.max_iters < 1 || cfg.conv < 1) throw ConfigError("max_iters and conv must be >= 1");
      for (const Instance& inst : instances) {
        const std::size_t size = inst.formula.num_variables() + count_aux_clauses(inst.formula);
        if (q < 1 || q > size) {
          throw ConfigError(inst.name + ": sub-QUBO size q=" + std::to_string(q) +
                            " outside [1, " + std::to_string(size) + "]");
        }
      }
      for (std::size_t i = 0; i < instances.size(); ++i) {
        for (std::uint64_t seed : spec.seeds) {
          RunJob job;
          job.instance = i;
          job.method = "subqubo";
          job.selector = to_string(sel);
          job.inner = "qubo";
          job.mq = q;
          job.seed = seed;
          job.subqubo = cfg;
          job.subqubo.seed = seed;
          jobs.push_back(std::move(job));
        }
      }
    }
  }

  for (Baseline b : spec.baselines) {
    if (b != Baseline::kExact && b != Baseline::kFullQubo && spec.baseline_flips < 1) {
      throw ConfigError("baseline_flips must be >= 1");
    }
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const CnfFormula& f = instances[i].formula;
      if (b == Baseline::kExact && f.num_variables() > spec.exact_max_n) continue;
      for (std::uint64_t seed : spec.seeds) {
        RunJob job;
        job.instance = i;
        job.method = "baseline";
        job.selector = "-";
        job.inner = to_string(b);
        job.baseline = b;
        job.seed = seed;
        if (b == Baseline::kFullQubo) {
          job.mq = f.num_variables() + count_aux_clauses(f);
          job.subqubo.selector = SubQuboSelector::kRandom;
          job.subqubo.q = job.mq;
          job.subqubo.max_iters = spec.base.max_iters;
          job.subqubo.conv = spec.base.conv;
          job.subqubo.tabu_tenure = spec.base.tabu_tenure;
          job.subqubo.tabu_steps_per_var = spec.base.tabu_steps_per_var;
          job.subqubo.tabu_restarts = spec.base.tabu_restarts;
          job.subqubo.seed = seed;
        } else if (b == Baseline::kExact) {
          job.mq = f.num_variables();
          job.solver.exact_node_budget = spec.exact_baseline_budget;
        } else {
          job.mq = spec.baseline_flips;
          job.solver.walksat_noise = spec.base.walksat_noise;
        }
        jobs.push_back(std::move(job));
      }
    }
  }
  return jobs;
}

RunRow execute_job(const RunJob& job, const std::vector<Instance>& instances) {
  const Instance& inst = instances.at(job.instance);
  RunRow row;
  row.dataset = inst.dataset;
  row.instance = inst.name;
  row.method = job.method;
  row.selector = job.selector;
  row.inner = job.inner;
  row.mq = job.mq;
  row.seed = job.seed;

  const auto start = std::chrono::steady_clock::now();
  auto from_trace = [&](const RunTrace& t) {
    row.final_energy = t.best_energy;
    row.iterations = t.iterations_run;
    row.stop_reason = to_string(t.stop_reason);
  };
  if (job.method == "subsat") {
    from_trace(solve(inst.formula, job.solver));
  } else if (job.method == "subqubo" || job.baseline == Baseline::kFullQubo) {
    from_trace(subqubo_solve(inst.formula, job.subqubo));
  } else if (job.baseline == Baseline::kExact) {
    Rng rng(job.seed);
    const ExactResult r = exact_maxsat(
        inst.formula, random_assignment(inst.formula.num_variables(), rng),
        job.solver.exact_node_budget);
    row.final_energy = r.energy;
    row.iterations = r.nodes;
    row.stop_reason = r.optimal ? "optimal" : "budget";
  } else {
    Rng rng(job.seed);
    WalkSatParams p;
    p.noise = job.solver.walksat_noise;
    p.max_flips = job.mq;
    p.heuristic = job.baseline == Baseline::kWalkSatBreak  ? WalkSatHeuristic::kBreak
                  : job.baseline == Baseline::kWalkSatMake ? WalkSatHeuristic::kMake
                                                           : WalkSatHeuristic::kEnergy;
    const Assignment a =
        walksat(inst.formula, random_assignment(inst.formula.num_variables(), rng), p, rng);
    row.final_energy = energy_of(inst.formula, a);
    row.iterations = 1;
    row.stop_reason = row.final_energy == 0 ? "zero_energy" : "max_iters";
  }
  row.wall_us = std::chrono::duration_cast<std::chrono::microseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return row;
}

std::vector<RunRow> run_jobs(const std::vector<RunJob>& jobs,
                             const std::vector<Instance>& instances, std::size_t threads,
                             const ProgressFn& progress) {
  std::vector<RunRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  std::size_t done = 0;
  std::mutex mu;
  std::exception_ptr failure;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        rows[i] = execute_job(jobs[i], instances);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        next = jobs.size();
        return;
      }
      std::lock_guard lock(mu);
      ++done;
      if (progress) progress(done, jobs.size());
    }
  };
  const std::size_t n = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, jobs.size()));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::vector<SummaryRow> summarize(const std::vector<RunRow>& rows) {
  using Key = std::tuple<std::string, std::string, std::string, std::string, std::size_t>;
  std::map<Key, std::size_t> index;
  std::vector<std::vector<const RunRow*>> groups;
  for (const RunRow& r : rows) {
    const Key key{r.dataset, r.method, r.selector, r.inner, r.mq};
    auto [it, fresh] = index.try_emplace(key, groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(&r);
  }
  std::vector<SummaryRow> out;
  out.reserve(groups.size());
  for (const auto& g : groups) {
    SummaryRow s;
    s.dataset = g.front()->dataset;
    s.method = g.front()->method;
    s.selector = g.front()->selector;
    s.inner = g.front()->inner;
    s.mq = g.front()->mq;
    s.runs = g.size();
    double energy = 0.0;
    double iterations = 0.0;
    double wall = 0.0;
    for (const RunRow* r : g) {
      energy += r->final_energy;
      iterations += static_cast<double>(r->iterations);
      wall += static_cast<double>(r->wall_us);
      s.max_iterations = std::max(s.max_iterations, r->iterations);
    }
    const auto n = static_cast<double>(g.size());
    s.mean_energy = energy / n;
    s.mean_iterations = iterations / n;
    s.mean_wall_us = wall / n;
    if (g.size() > 1) {
      double ss = 0.0;
      for (const RunRow* r : g) ss += (r->final_energy - s.mean_energy) * (r->final_energy - s.mean_energy);
      s.std_energy = std::sqrt(ss / (n - 1.0));
    }
    out.push_back(std::move(s));
  }
  return out;
}

const csv::Row& run_columns() {
  static const csv::Row columns = {"dataset", "instance",     "method",      "selector",
                                   "inner",   "mq",           "seed",        "final_energy",
                                   "iterations", "stop_reason", "wall_us"};
  return columns;
}

const csv::Row& summary_columns() {
  static const csv::Row columns = {"dataset",        "method",         "selector",
                                   "inner",          "mq",             "mean_energy",
                                   "std_energy",     "mean_iterations", "max_iterations",
                                   "mean_wall_us",   "runs"};
  return columns;
}

csv::Row to_csv_row(const RunRow& r) {
  return {r.dataset,
          r.instance,
          r.method,
          r.selector,
          r.inner,
          std::to_string(r.mq),
          std::to_string(r.seed),
          std::to_string(r.final_energy),
          std::to_string(r.iterations),
          r.stop_reason,
          std::to_string(r.wall_us)};
}

csv::Row to_csv_row(const SummaryRow& s) {
  return {s.dataset,
          s.method,
          s.selector,
          s.inner,
          std::to_string(s.mq),
          csv::format_fixed(s.mean_energy, 4),
          csv::format_fixed(s.std_energy, 4),
          csv::format_fixed(s.mean_iterations, 2),
          std::to_string(s.max_iterations),
          csv::format_fixed(s.mean_wall_us, 1),
          std::to_string(s.runs)};
}

void write_runs_csv(const std::vector<RunRow>& rows, std::ostream& out) {
  csv::write_row(out, run_columns());
  for (const RunRow& r : rows) csv::write_row(out, to_csv_row(r));
}

void write_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out) {
  csv::write_row(out, summary_columns());
  for (const SummaryRow& s : rows) csv::write_row(out, to_csv_row(s));
}

namespace {

template <typename T>
T field_number(const std::string& text, std::size_t row, const char* column) {
  T value{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("row " + std::to_string(row) + ": bad " + column + " '" + text +
                                "'");
  }
  return value;
}

}  // namespace

std::vector<RunRow> read_runs_csv(std::istream& in) {
  const std::vector<csv::Row> rows = csv::read(in);
  if (rows.empty() || rows[0] != run_columns()) {
    throw std::invalid_argument("per-run CSV header does not match the expected columns");
  }
  std::vector<RunRow> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const csv::Row& r = rows[i];
    if (r.size() != run_columns().size()) {
      throw std::invalid_argument("row " + std::to_string(i) + ": expected " +
                                  std::to_string(run_columns().size()) + " fields");
    }
    RunRow row;
    row.dataset = r[0];
    row.instance = r[1];
    row.method = r[2];
    row.selector = r[3];
    row.inner = r[4];
    row.mq = field_number<std::size_t>(r[5], i, "mq");
    row.seed = field_number<std::uint64_t>(r[6], i, "seed");
    row.final_energy = field_number<int>(r[7], i, "final_energy");
    row.iterations = field_number<std::size_t>(r[8], i, "iterations");
    row.stop_reason = r[9];
    row.wall_us = field_number<std::int64_t>(r[10], i, "wall_us");
    out.push_back(std::move(row));
  }
  return out;
}

VerifyReport verify_summary(std::istream& runs_csv, std::istream& summary_csv) {
  const std::vector<SummaryRow> expected = summarize(read_runs_csv(runs_csv));
  const std::vector<csv::Row> actual = csv::read(summary_csv);
  VerifyReport report;
  report.groups = expected.size();
  if (actual.empty() || actual[0] != summary_columns()) {
    report.mismatches.push_back("summary CSV header does not match the expected columns");
    return report;
  }
  if (actual.size() - 1 != expected.size()) {
    report.mismatches.push_back("summary has " + std::to_string(actual.size() - 1) +
                                " rows, per-run data gives " + std::to_string(expected.size()));
  }
  const std::size_t n = std::min(actual.size() - 1, expected.size());
  for (std::size_t i = 0; i < n; ++i) {
    const csv::Row want = to_csv_row(expected[i]);
    const csv::Row& got = actual[i + 1];
    for (std::size_t c = 0; c < want.size(); ++c) {
      const std::string have = c < got.size() ? got[c] : std::string("<missing>");
      if (have != want[c]) {
        report.mismatches.push_back("row " + std::to_string(i + 1) + " " + summary_columns()[c] +
                                    ": summary has '" + have + "', recomputed '" + want[c] + "'");
      }
    }
  }
  return report;
}

}  // namespace subsat
