// proms: command-line front end.
//
//   proms solve  FILE            run one solver on one DIMACS instance
//   proms bench  PATH...         run solvers over instance files/directories
//   proms gen    --n --m [--k]   write a uniform random k-SAT instance
//   proms theory                 random 3-SAT first-moment tables
//
// Exit codes: 0 success, 1 an instance failed to load, 2 invalid configuration.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "proms/baselines.hpp"
#include "proms/bench.hpp"
#include "proms/dimacs.hpp"
#include "proms/generator.hpp"
#include "proms/solver.hpp"
#include "proms/theory.hpp"

namespace {

using namespace proms;
using bench::SolverKind;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitConfig = 2;

struct SearchOptions {
  std::string clause_sel = "sbfs";
  std::string scheme = "mcbn";
  double cutoff = 300.0;
  std::uint64_t max_steps = std::numeric_limits<std::int64_t>::max();
  std::uint64_t seed = 1;
  std::optional<double> zeta, eta, delta, mmax_factor;
  std::string optima_file;
  std::string format = "table";
};

void add_search_options(CLI::App* app, SearchOptions& o) {
  app->add_option("--clause-sel", o.clause_sel, "Unsatisfied-clause selection")
      ->check(CLI::IsMember({"sbfs", "pbfs", "rs"}));
  app->add_option("--scheme", o.scheme, "Make/break caching scheme")
      ->check(CLI::IsMember({"mcbc", "mcbn", "mnbc", "mnbn"}));
  app->add_option("--cutoff", o.cutoff, "Wall-clock budget per run in seconds")
      ->check(CLI::PositiveNumber);
  app->add_option("--max-steps", o.max_steps, "Flip budget per run")->check(CLI::PositiveNumber);
  app->add_option("--seed", o.seed, "Seed (bench: seed of run 0)");
  app->add_option("--zeta", o.zeta, "Make exponent (default r + 17.5)");
  app->add_option("--eta", o.eta, "Break exponent (default -2.5)");
  app->add_option("--delta", o.delta, "Clause-score threshold (default max(0, 0.4 r - 1.4))");
  app->add_option("--mmax-factor", o.mmax_factor, "Defragmentation threshold as a multiple of m");
  app->add_option("--optima", o.optima_file, "File of '<instance> <optimum>' lines");
  app->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "jsonl"}));
}

bench::BenchConfig make_config(const SearchOptions& o, const std::vector<std::string>& solvers) {
  bench::BenchConfig cfg;
  cfg.solvers.clear();
  for (const auto& name : solvers) {
    auto kind = bench::parse_solver(name);
    if (!kind) throw std::invalid_argument("unknown solver '" + name + "'");
    cfg.solvers.push_back(*kind);
  }
  cfg.cutoff_seconds = o.cutoff;
  cfg.max_steps = o.max_steps;
  cfg.seed_base = o.seed;
  cfg.overrides.zeta = o.zeta;
  cfg.overrides.eta = o.eta;
  cfg.overrides.delta = o.delta;
  cfg.overrides.m_max_factor = o.mmax_factor;
  cfg.overrides.scheme = *parse_cache_scheme(o.scheme);
  cfg.overrides.clause_sel = *parse_clause_selection(o.clause_sel);
  if (!o.optima_file.empty()) cfg.optima = bench::read_optima_file(o.optima_file);
  return cfg;
}

int run_solve(const std::string& file, const std::string& solver, const SearchOptions& o) {
  bench::BenchConfig cfg;
  try {
    cfg = make_config(o, {solver});
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "proms: " << e.what() << '\n';
    return kExitConfig;
  }
  auto loaded = bench::load_instances({file});
  if (!loaded.errors.empty()) {
    for (const auto& err : loaded.errors) std::cerr << "proms: " << err << '\n';
    return kExitParse;
  }
  const auto& inst = loaded.instances.front();
  const SolverParams params = bench::params_for(inst.formula, cfg, inst.name, cfg.seed_base);
  RunResult result;
  switch (cfg.solvers.front()) {
    case SolverKind::ProMS: result = solve(inst.formula, params); break;
    case SolverKind::ProbSAT: result = solve_probsat(inst.formula, params, cfg.baseline); break;
    case SolverKind::WalkSAT: result = solve_walksat(inst.formula, params, cfg.baseline); break;
  }

  if (o.format == "jsonl") {
    std::cout << bench::to_json_line({inst.name, inst.class_name, solver, cfg.seed_base,
                                      result.best_unsat, result.steps, result.best_step,
                                      result.time_to_best, result.wall_time})
              << '\n';
    return kExitOk;
  }
  std::cout << "c instance " << inst.name << " n=" << inst.formula.num_vars()
            << " m=" << inst.formula.num_clauses() << " r=" << inst.formula.ratio() << '\n'
            << "c solver " << solver << " scheme " << o.scheme << " clause-sel " << o.clause_sel
            << " seed " << cfg.seed_base << '\n'
            << "c zeta " << params.zeta << " eta " << params.eta << " delta " << params.delta << '\n'
            << "c steps " << result.steps << " best_step " << result.best_step << " time "
            << result.wall_time << " time_to_best " << result.time_to_best << " flips/s "
            << static_cast<std::uint64_t>(result.flips_per_second) << '\n'
            << "o " << result.best_unsat << '\n'
            << (result.best_unsat == 0 ? "s OPTIMUM FOUND" : "s UNKNOWN") << '\n'
            << 'v';
  for (Var v = 0; v < inst.formula.num_vars(); ++v) {
    std::cout << ' ' << (result.best_assignment[v] ? "" : "-") << v + 1;
  }
  std::cout << " 0\n";
  return kExitOk;
}

int run_bench_command(const std::vector<std::string>& paths, const std::vector<std::string>& solvers,
                      std::uint32_t runs, int workers, const SearchOptions& o) {
  bench::BenchConfig cfg;
  try {
    cfg = make_config(o, solvers);
    cfg.runs = runs;
    cfg.workers = workers;
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "proms: " << e.what() << '\n';
    return kExitConfig;
  }
  std::vector<std::filesystem::path> fs_paths(paths.begin(), paths.end());
  auto loaded = bench::load_instances(fs_paths);
  for (const auto& err : loaded.errors) std::cerr << "proms: " << err << '\n';

  const auto records = bench::run_bench(loaded.instances, cfg);
  if (o.format == "jsonl") {
    std::cout << bench::to_jsonl(records);
  } else {
    std::cout << bench::render_table(bench::summarize(records, cfg.optima));
  }
  return loaded.errors.empty() ? kExitOk : kExitParse;
}

int run_gen(const GenSpec& spec, const std::string& output) {
  const Formula f = generate(spec);
  const std::string text = to_dimacs(f);
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "proms: cannot write " << output << '\n';
      return kExitConfig;
    }
    out << text;
  }
  return kExitOk;
}

int run_theory(const std::vector<double>& ratios, double lambda, double n) {
  std::cout << std::fixed << std::setprecision(6);
  std::cout << "constant-violation threshold  " << theory::constant_violation_threshold() << '\n';
  std::cout << "\n       r      h(r)\n";
  for (double r : ratios) {
    std::cout << std::setw(8) << std::setprecision(2) << r << "  ";
    try {
      std::cout << std::setprecision(6) << theory::h_of_r(r) << '\n';
    } catch (const std::domain_error&) {
      std::cout << "-\n";
    }
  }
  if (lambda > 0.0) {
    std::cout << "\n       r    lambda   exponent/clause   base^n   gap/n\n";
    for (double r : ratios) {
      const double e = theory::exponent_per_clause(r, lambda);
      std::cout << std::setw(8) << std::setprecision(2) << r << "  " << std::setprecision(4)
                << lambda << "  " << std::setw(16) << std::setprecision(6) << e << "  "
                << std::setw(7) << std::setprecision(4) << std::exp2(e * r) << "  ";
      if (e >= 0) {
        std::cout << theory::hamming_gap(r, lambda, n) / n << '\n';
      } else {
        std::cout << "-\n";
      }
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ProMS: probability-distribution local search for Max-SAT"};
  app.require_subcommand(1);

  SearchOptions solve_opts;
  std::string solve_file;
  std::string solve_solver = "proms";
  auto* solve_cmd = app.add_subcommand("solve", "Solve one DIMACS instance");
  solve_cmd->add_option("file", solve_file, "DIMACS CNF file")->required();
  solve_cmd->add_option("--solver", solve_solver, "Solver")
      ->check(CLI::IsMember({"proms", "probsat", "walksat"}));
  add_search_options(solve_cmd, solve_opts);

  SearchOptions bench_opts;
  std::vector<std::string> bench_paths;
  std::vector<std::string> bench_solvers{"proms"};
  std::uint32_t runs = 1;
  int workers = 0;
  auto* bench_cmd = app.add_subcommand("bench", "Benchmark solvers over instances");
  bench_cmd->add_option("paths", bench_paths, "Instance files or directories")->required();
  bench_cmd->add_option("--solver", bench_solvers, "Solvers (comma separated)")
      ->delimiter(',')
      ->check(CLI::IsMember({"proms", "probsat", "walksat"}));
  bench_cmd->add_option("--runs", runs, "Runs per instance and solver")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--workers", workers, "Parallel runs (default: all cores)")
      ->check(CLI::PositiveNumber);
  add_search_options(bench_cmd, bench_opts);

  GenSpec gen_spec;
  std::string gen_output;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a uniform random k-SAT instance");
  gen_cmd->add_option("--n", gen_spec.n, "Variables")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--m", gen_spec.m, "Clauses")->required();
  gen_cmd->add_option("--k", gen_spec.k, "Clause length")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen_spec.seed, "Seed");
  gen_cmd->add_option("-o,--output", gen_output, "Output file (default stdout)");

  std::vector<double> ratios{6.0, 7.5, 10.0, 15.0, 21.5, 50.0};
  double lambda = 0.0;
  double gap_n = 1000.0;
  auto* theory_cmd = app.add_subcommand("theory", "Random 3-SAT threshold tables");
  theory_cmd->add_option("--ratios", ratios, "Clause/variable ratios")->delimiter(',');
  theory_cmd->add_option("--lambda", lambda, "Also tabulate the exponent at this satisfied fraction");
  theory_cmd->add_option("--n", gap_n, "Variable count for the Hamming gap column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*solve_cmd) return run_solve(solve_file, solve_solver, solve_opts);
    if (*bench_cmd) return run_bench_command(bench_paths, bench_solvers, runs, workers, bench_opts);
    if (*gen_cmd) return run_gen(gen_spec, gen_output);
    if (*theory_cmd) return run_theory(ratios, lambda, gap_n);
  } catch (const std::invalid_argument& e) {
    std::cerr << "proms: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "proms: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitOk;
}
