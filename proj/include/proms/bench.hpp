#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "proms/baselines.hpp"
#include "proms/cnf.hpp"
#include "proms/search_state.hpp"
#include "proms/solver.hpp"

namespace proms::bench {

enum class SolverKind { ProMS, ProbSAT, WalkSAT };

std::string_view to_string(SolverKind s);
std::optional<SolverKind> parse_solver(std::string_view name);

struct Instance {
  std::string name;        // file stem
  std::string class_name;  // directory name for directory inputs, else the stem
  Formula formula;
};

/// Command-line overrides on top of default_params(formula).
struct ParamOverrides {
  std::optional<double> zeta;
  std::optional<double> eta;
  std::optional<double> delta;
  std::optional<double> m_max_factor;
  CacheScheme scheme = CacheScheme::MCBN;
  ClauseSelection clause_sel = ClauseSelection::SBFS;
};

struct BenchConfig {
  std::vector<SolverKind> solvers{SolverKind::ProMS};
  std::uint32_t runs = 1;
  std::optional<double> cutoff_seconds = 300.0;
  std::uint64_t max_steps = std::numeric_limits<std::int64_t>::max();
  std::uint64_t seed_base = 1;
  /// 0 means one worker per available core.
  int workers = 0;
  ParamOverrides overrides;
  BaselineParams baseline;
  /// Known optima by instance name. A run stops once it reaches its optimum.
  std::map<std::string, std::size_t> optima;

  /// Throws std::invalid_argument on runs == 0, workers < 0, an empty solver
  /// list or invalid solver parameters.
  void validate() const;
};

/// One (instance, solver, seed) run. Carries everything the tables need.
struct RunRecord {
  std::string instance;
  std::string class_name;
  std::string solver;
  std::uint64_t seed = 0;
  std::size_t best = 0;
  std::uint64_t steps = 0;
  std::uint64_t best_step = 0;
  double time_to_best = 0.0;
  double wall_time = 0.0;

  bool operator==(const RunRecord&) const = default;
};

struct LoadResult {
  std::vector<Instance> instances;
  std::vector<std::string> errors;
};

/// Files are read directly; directories contribute every regular file in
/// them (sorted by name). Unreadable or malformed files are reported in
/// `errors` and skipped.
LoadResult load_instances(const std::vector<std::filesystem::path>& paths);

/// Lines of `<instance-name> <optimum>`; `#` starts a comment.
std::map<std::string, std::size_t> parse_optima(std::istream& in);
std::map<std::string, std::size_t> read_optima_file(const std::filesystem::path& path);

SolverParams params_for(const Formula& f, const BenchConfig& cfg, const std::string& instance,
                        std::uint64_t seed);

RunRecord run_one(const Instance& inst, SolverKind solver, const BenchConfig& cfg,
                  std::uint32_t run_index);

/// Every (instance, solver, run) task; seed = seed_base + run index. Tasks
/// are spread over OpenMP threads, never split; the output order is fixed
/// (instance, then solver, then run).
std::vector<RunRecord> run_bench(const std::vector<Instance>& instances, const BenchConfig& cfg);

/// Serial reference of run_bench with identical task order and seeds.
std::vector<RunRecord> run_bench_serial(const std::vector<Instance>& instances,
                                        const BenchConfig& cfg);

struct InstanceSummary {
  std::string instance;
  std::string class_name;
  std::string solver;
  std::size_t reference = 0;  // best over the session (or the known optimum)
  std::size_t opt = 0;        // best over this solver's runs
  double avg = 0.0;           // mean over this solver's runs
  std::uint32_t runs = 0;
  std::uint32_t successes = 0;  // runs whose best equals the reference
  double success_time_sum = 0.0;
};

struct ClassSummary {
  std::string class_name;
  std::string solver;
  std::uint32_t instances = 0;
  double opt = 0.0;  // mean of per-instance opt
  double avg = 0.0;  // mean of per-instance avg
  /// Mean time-to-best over successful runs; empty when there were none.
  std::optional<double> time;
  std::uint32_t runs = 0;
  std::uint32_t successes = 0;
};

struct Summary {
  std::vector<std::string> solvers;  // first-seen order
  std::vector<std::string> classes;  // first-seen order
  std::vector<InstanceSummary> instances;
  std::vector<ClassSummary> classes_by_solver;

  const ClassSummary* find(std::string_view class_name, std::string_view solver) const;
};

/// Session-scoped aggregation: an instance's reference is the known optimum
/// when given, otherwise the minimum best over every record of that instance.
Summary summarize(const std::vector<RunRecord>& records,
                  const std::map<std::string, std::size_t>& optima = {});

/// Fixed-width text table: one row per class, an opt./avg./time block per
/// solver, "-" for a time that was never reached.
std::string render_table(const Summary& summary);

std::string to_json_line(const RunRecord& r);
std::string to_jsonl(const std::vector<RunRecord>& records);
std::vector<RunRecord> parse_jsonl(std::istream& in);

struct ProbeResult {
  std::uint64_t steps = 0;
  double seconds = 0.0;
  double flips_per_second = 0.0;
};

/// Runs ProMS (default parameters, given scheme) for `seconds` of wall time,
/// or for exactly `step_budget` steps when one is given. Stops early only if
/// the formula becomes satisfied.
ProbeResult flips_per_second_probe(const Formula& f, CacheScheme scheme, double seconds,
                                   std::uint64_t seed = 1,
                                   std::optional<std::uint64_t> step_budget = std::nullopt);

}  // namespace proms::bench
