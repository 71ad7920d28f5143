#include "proms/bench.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "proms/dimacs.hpp"

namespace proms::bench {

using json = nlohmann::json;

std::string_view to_string(SolverKind s) {
  switch (s) {
    case SolverKind::ProMS: return "proms";
    case SolverKind::ProbSAT: return "probsat";
    case SolverKind::WalkSAT: return "walksat";
  }
  return "?";
}

std::optional<SolverKind> parse_solver(std::string_view name) {
  for (auto s : {SolverKind::ProMS, SolverKind::ProbSAT, SolverKind::WalkSAT}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

void BenchConfig::validate() const {
  if (solvers.empty()) throw std::invalid_argument("no solver selected");
  if (runs == 0) throw std::invalid_argument("runs must be at least 1");
  if (workers < 0) throw std::invalid_argument("workers must be at least 1");
  if (max_steps == 0) throw std::invalid_argument("max_steps must be at least 1");
  if (cutoff_seconds && !(*cutoff_seconds > 0.0)) throw std::invalid_argument("cutoff must be positive");
  if (overrides.m_max_factor && !(*overrides.m_max_factor >= 1.0)) {
    throw std::invalid_argument("m_max_factor must be at least 1");
  }
  if (overrides.delta && !(*overrides.delta >= 0.0)) throw std::invalid_argument("delta must be non-negative");
  baseline.validate();
}

LoadResult load_instances(const std::vector<std::filesystem::path>& paths) {
  namespace fs = std::filesystem;
  LoadResult out;
  auto load = [&](const fs::path& file, const std::string& class_name) {
    try {
      out.instances.push_back({file.stem().string(), class_name, read_dimacs_file(file)});
    } catch (const std::exception& e) {
      out.errors.push_back(file.string() + ": " + e.what());
    }
  };
  for (const auto& path : paths) {
    std::error_code ec;
    if (fs::is_directory(path, ec)) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(path, ec)) {
        if (entry.is_regular_file()) files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end());
      auto dir = path.filename().empty() ? path.parent_path().filename() : path.filename();
      for (const auto& file : files) load(file, dir.string());
    } else if (fs::is_regular_file(path, ec)) {
      load(path, path.stem().string());
    } else {
      out.errors.push_back(path.string() + ": no such file or directory");
    }
  }
  return out;
}

std::map<std::string, std::size_t> parse_optima(std::istream& in) {
  std::map<std::string, std::size_t> optima;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string name;
    if (!(fields >> name)) continue;
    long long value = -1;
    std::string rest;
    if (!(fields >> value) || value < 0 || (fields >> rest)) {
      throw std::invalid_argument("optima line " + std::to_string(line_no) +
                                  ": expected '<instance> <optimum>'");
    }
    optima[name] = static_cast<std::size_t>(value);
  }
  return optima;
}

std::map<std::string, std::size_t> read_optima_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open optima file " + path.string());
  return parse_optima(in);
}

SolverParams params_for(const Formula& f, const BenchConfig& cfg, const std::string& instance,
                        std::uint64_t seed) {
  SolverParams p = default_params(f);
  const auto& o = cfg.overrides;
  if (o.zeta) p.zeta = *o.zeta;
  if (o.eta) p.eta = *o.eta;
  if (o.delta) p.delta = *o.delta;
  if (o.m_max_factor) p.m_max_factor = *o.m_max_factor;
  p.scheme = o.scheme;
  p.clause_sel = o.clause_sel;
  p.max_steps = cfg.max_steps;
  p.cutoff_seconds = cfg.cutoff_seconds;
  p.seed = seed;
  if (auto it = cfg.optima.find(instance); it != cfg.optima.end()) p.target_unsat = it->second;
  return p;
}

RunRecord run_one(const Instance& inst, SolverKind solver, const BenchConfig& cfg,
                  std::uint32_t run_index) {
  const std::uint64_t seed = cfg.seed_base + run_index;
  const SolverParams params = params_for(inst.formula, cfg, inst.name, seed);
  RunResult result;
  switch (solver) {
    case SolverKind::ProMS: result = solve(inst.formula, params); break;
    case SolverKind::ProbSAT: result = solve_probsat(inst.formula, params, cfg.baseline); break;
    case SolverKind::WalkSAT: result = solve_walksat(inst.formula, params, cfg.baseline); break;
  }
  return {inst.name,         inst.class_name,    std::string(to_string(solver)),
          seed,              result.best_unsat,  result.steps,
          result.best_step,  result.time_to_best, result.wall_time};
}

namespace {

struct Task {
  std::size_t instance;
  SolverKind solver;
  std::uint32_t run;
};

std::vector<Task> make_tasks(const std::vector<Instance>& instances, const BenchConfig& cfg) {
  std::vector<Task> tasks;
  tasks.reserve(instances.size() * cfg.solvers.size() * cfg.runs);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (SolverKind s : cfg.solvers) {
      for (std::uint32_t r = 0; r < cfg.runs; ++r) tasks.push_back({i, s, r});
    }
  }
  return tasks;
}

}  // namespace

std::vector<RunRecord> run_bench(const std::vector<Instance>& instances, const BenchConfig& cfg) {
  cfg.validate();
  const auto tasks = make_tasks(instances, cfg);
  std::vector<RunRecord> records(tasks.size());
  const int threads = cfg.workers > 0 ? cfg.workers : omp_get_num_procs();
  const auto count = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t t = 0; t < count; ++t) {
    const Task& task = tasks[static_cast<std::size_t>(t)];
    records[static_cast<std::size_t>(t)] = run_one(instances[task.instance], task.solver, cfg, task.run);
  }
  return records;
}

std::vector<RunRecord> run_bench_serial(const std::vector<Instance>& instances,
                                        const BenchConfig& cfg) {
  cfg.validate();
  std::vector<RunRecord> records;
  for (const Task& task : make_tasks(instances, cfg)) {
    records.push_back(run_one(instances[task.instance], task.solver, cfg, task.run));
  }
  return records;
}

const ClassSummary* Summary::find(std::string_view class_name, std::string_view solver) const {
  for (const auto& c : classes_by_solver) {
    if (c.class_name == class_name && c.solver == solver) return &c;
  }
  return nullptr;
}

Summary summarize(const std::vector<RunRecord>& records,
                  const std::map<std::string, std::size_t>& optima) {
  Summary out;
  std::vector<std::string> instance_order;
  std::map<std::string, std::string> class_of;
  std::map<std::string, std::size_t> session_best;
  auto remember = [](std::vector<std::string>& order, const std::string& key) {
    if (std::find(order.begin(), order.end(), key) == order.end()) order.push_back(key);
  };
  for (const auto& r : records) {
    remember(out.solvers, r.solver);
    remember(out.classes, r.class_name);
    remember(instance_order, r.instance);
    class_of[r.instance] = r.class_name;
    auto [it, fresh] = session_best.try_emplace(r.instance, r.best);
    if (!fresh) it->second = std::min(it->second, r.best);
  }

  for (const auto& instance : instance_order) {
    const auto known = optima.find(instance);
    const std::size_t reference = known != optima.end() ? known->second : session_best[instance];
    for (const auto& solver : out.solvers) {
      InstanceSummary s;
      s.instance = instance;
      s.class_name = class_of[instance];
      s.solver = solver;
      s.reference = reference;
      s.opt = std::numeric_limits<std::size_t>::max();
      double total = 0.0;
      for (const auto& r : records) {
        if (r.instance != instance || r.solver != solver) continue;
        ++s.runs;
        s.opt = std::min(s.opt, r.best);
        total += static_cast<double>(r.best);
        if (r.best == reference) {
          ++s.successes;
          s.success_time_sum += r.time_to_best;
        }
      }
      if (s.runs == 0) continue;
      s.avg = total / s.runs;
      out.instances.push_back(s);
    }
  }

  for (const auto& class_name : out.classes) {
    for (const auto& solver : out.solvers) {
      ClassSummary c;
      c.class_name = class_name;
      c.solver = solver;
      double opt_sum = 0.0;
      double avg_sum = 0.0;
      double time_sum = 0.0;
      for (const auto& s : out.instances) {
        if (s.class_name != class_name || s.solver != solver) continue;
        ++c.instances;
        opt_sum += static_cast<double>(s.opt);
        avg_sum += s.avg;
        c.runs += s.runs;
        c.successes += s.successes;
        time_sum += s.success_time_sum;
      }
      if (c.instances == 0) continue;
      c.opt = opt_sum / c.instances;
      c.avg = avg_sum / c.instances;
      if (c.successes > 0) c.time = time_sum / c.successes;
      out.classes_by_solver.push_back(c);
    }
  }
  return out;
}

namespace {

std::string fixed(double value, int decimals, int width) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%*.*f", width, decimals, value);
  return buf;
}

std::string pad(std::string_view text, std::size_t width, bool right) {
  std::string s(text);
  if (s.size() >= width) return s;
  const std::string fill(width - s.size(), ' ');
  return right ? fill + s : s + fill;
}

}  // namespace

std::string render_table(const Summary& summary) {
  constexpr int kCell = 9;
  std::size_t label = 5;
  for (const auto& c : summary.classes) label = std::max(label, c.size());
  label += 2;

  std::ostringstream out;
  out << pad("class", label, false);
  for (const auto& s : summary.solvers) out << "  " << pad(s, 3 * kCell, false);
  out << '\n' << pad("", label, false);
  for (std::size_t i = 0; i < summary.solvers.size(); ++i) {
    out << "  " << pad("opt.", kCell, true) << pad("avg.", kCell, true) << pad("time", kCell, true);
  }
  out << '\n';
  for (const auto& class_name : summary.classes) {
    out << pad(class_name, label, false);
    for (const auto& solver : summary.solvers) {
      out << "  ";
      const ClassSummary* c = summary.find(class_name, solver);
      if (!c) {
        out << pad("", 3 * kCell, false);
        continue;
      }
      out << fixed(c->opt, 2, kCell) << fixed(c->avg, 2, kCell)
          << (c->time ? fixed(*c->time, 2, kCell) : pad("-", kCell, true));
    }
    out << '\n';
  }
  std::string text = out.str();
  // Trailing blanks from the padding are not part of the format.
  std::string trimmed;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    line.erase(line.find_last_not_of(' ') + 1);
    trimmed += line + '\n';
  }
  return trimmed;
}

std::string to_json_line(const RunRecord& r) {
  const json j = {{"instance", r.instance},   {"class", r.class_name},
                  {"solver", r.solver},       {"seed", r.seed},
                  {"best", r.best},           {"steps", r.steps},
                  {"best_step", r.best_step}, {"time_to_best", r.time_to_best},
                  {"wall_time", r.wall_time}};
  return j.dump();
}

std::string to_jsonl(const std::vector<RunRecord>& records) {
  std::string out;
  for (const auto& r : records) out += to_json_line(r) + '\n';
  return out;
}

std::vector<RunRecord> parse_jsonl(std::istream& in) {
  std::vector<RunRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const json j = json::parse(line);
    RunRecord r;
    r.instance = j.at("instance").get<std::string>();
    r.class_name = j.at("class").get<std::string>();
    r.solver = j.at("solver").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.best = j.at("best").get<std::size_t>();
    r.steps = j.at("steps").get<std::uint64_t>();
    r.best_step = j.value("best_step", std::uint64_t{0});
    r.time_to_best = j.at("time_to_best").get<double>();
    r.wall_time = j.at("wall_time").get<double>();
    records.push_back(std::move(r));
  }
  return records;
}

ProbeResult flips_per_second_probe(const Formula& f, CacheScheme scheme, double seconds,
                                   std::uint64_t seed, std::optional<std::uint64_t> step_budget) {
  SolverParams p = default_params(f);
  p.scheme = scheme;
  p.seed = seed;
  if (step_budget) {
    p.max_steps = *step_budget;
  } else {
    p.cutoff_seconds = seconds;
  }
  const RunResult r = solve(f, p);
  return {r.steps, r.wall_time, r.flips_per_second};
}

}  // namespace proms::bench
