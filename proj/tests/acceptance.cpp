// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance            run every criterion
//   acceptance 4 8        run only the listed criteria
//
// Exit status is 0 only if every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "proms/baselines.hpp"
#include "proms/bench.hpp"
#include "proms/generator.hpp"
#include "proms/oracle.hpp"
#include "proms/solver.hpp"
#include "proms/theory.hpp"

#ifndef PROMS_FIXTURE_DIR
#error "PROMS_FIXTURE_DIR must be defined"
#endif

namespace {

using namespace proms;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

constexpr ClauseSelection kSelections[] = {ClauseSelection::SBFS, ClauseSelection::PBFS,
                                           ClauseSelection::RS};

// 1. Cached make/break equal the brute-force values after every flip.
Outcome oracle_equivalence() {
  std::uint64_t checks = 0;
  std::uint64_t mismatches = 0;
  for (std::uint64_t inst = 0; inst < 20; ++inst) {
    const Formula f = generate({.n = 30, .m = 130, .k = 3, .seed = 1000 + inst});
    for (CacheScheme scheme : kAllSchemes) {
      Rng rng(inst);
      SearchState s(f, random_assignment(f.num_vars(), rng), scheme, ClauseSelection::SBFS,
                    max_tail_for(f, 4.5));
      for (int flip = 0; flip < 1000; ++flip) {
        s.flip(static_cast<Var>(rng.below(f.num_vars())));
        for (Var v = 0; v < f.num_vars(); ++v) {
          const MakeBreak expect = brute_force_make_break(f, s.assignment(), v);
          mismatches += s.make_value(v) != expect.make || s.break_value(v) != expect.brk;
          ++checks;
        }
      }
    }
  }
  return {mismatches == 0, format("%llu value pairs checked, %llu mismatches",
                                  static_cast<unsigned long long>(checks),
                                  static_cast<unsigned long long>(mismatches))};
}

// 2. Identical seeds give identical flip sequences under every scheme.
Outcome scheme_determinism() {
  std::size_t runs = 0;
  std::size_t differing = 0;
  for (std::uint64_t inst = 0; inst < 5; ++inst) {
    const Formula f = generate({.n = 100, .m = 400 + 200 * static_cast<std::uint32_t>(inst),
                                .k = 3, .seed = 2000 + inst});
    for (ClauseSelection sel : kSelections) {
      SolverParams p = default_params(f);
      p.clause_sel = sel;
      p.max_steps = 50000;
      p.seed = 7 + inst;
      std::vector<Var> reference;
      const RunResult base = solve(f, p, &reference);
      for (CacheScheme scheme : kAllSchemes) {
        for (int rep = 0; rep < 2; ++rep) {
          p.scheme = scheme;
          std::vector<Var> trace;
          const RunResult r = solve(f, p, &trace);
          ++runs;
          differing += trace != reference || r.best_unsat != base.best_unsat ||
                       r.best_assignment != base.best_assignment;
        }
      }
    }
  }
  return {differing == 0, format("%zu runs of 50000 flips compared, %zu differ", runs, differing)};
}

// 3. Randomized churn never violates buffer invariants.
Outcome buffer_invariants() {
  constexpr std::size_t kClauses = 200;
  constexpr int kOps = 100000;
  std::size_t violations = 0;
  std::size_t defrags_checked = 0;

  Rng rng(3);
  SlottedUnsatBuffer slotted(kClauses, 3 * kClauses);
  testing::FifoModel model;
  for (int op = 0; op < kOps; ++op) {
    const auto kind = rng.below(10);
    const auto c = static_cast<ClauseId>(rng.below(kClauses));
    if (kind < 3) {
      if (!model.contains(c)) {
        slotted.insert(c);
        model.insert(c);
      }
    } else if (kind < 5) {
      if (model.contains(c)) {
        slotted.remove(c);
        model.remove(c);
      }
    } else if (kind < 9) {
      if (model.size() > 0) violations += slotted.pick() != model.pick();
    } else {
      const auto before = slotted.ordered_contents();
      slotted.defragment();
      ++defrags_checked;
      violations += slotted.ordered_contents() != before;
      violations += slotted.head() != 0 || slotted.tail() != slotted.size();
    }
    violations += !testing::check_slotted(slotted, kClauses, model).empty();
  }

  DenseUnsatBuffer dense(kClauses);
  std::set<ClauseId> members;
  for (int op = 0; op < kOps; ++op) {
    const auto kind = rng.below(8);
    const auto c = static_cast<ClauseId>(rng.below(kClauses));
    if (kind < 3) {
      if (!members.count(c)) {
        dense.insert(c);
        members.insert(c);
      }
    } else if (kind < 5) {
      if (members.count(c)) {
        dense.remove(c);
        members.erase(c);
      }
    } else if (!members.empty()) {
      const ClauseId picked = kind == 5 ? dense.pick_sequential() : dense.pick_random(rng);
      violations += members.count(picked) == 0;
    }
    violations += !testing::check_dense(dense, kClauses, members).empty();
  }
  return {violations == 0, format("2 x %d operations (%zu explicit defragmentations), %zu violations",
                                  kOps, defrags_checked, violations)};
}

// 4. ProMS reaches the exhaustive optimum on tiny instances. The verdict uses
// the default configuration (SBFS); the same runs under random clause
// selection are reported alongside for comparison.
Outcome tiny_optimality() {
  constexpr int kInstances = 50;
  constexpr int kSeeds = 10;
  int solved_instances = 0;
  int successful_runs = 0;
  int successful_rs_runs = 0;
  for (int inst = 0; inst < kInstances; ++inst) {
    const Formula f = generate({.n = 20, .m = 160, .k = 3, .seed = 4000 + static_cast<std::uint64_t>(inst)});
    const std::size_t optimum = brute_force_optimum(f);
    SolverParams p = default_params(f);
    p.max_steps = 1'000'000;
    p.target_unsat = optimum;
    bool any = false;
    for (int seed = 1; seed <= kSeeds; ++seed) {
      p.seed = static_cast<std::uint64_t>(seed);
      p.clause_sel = ClauseSelection::SBFS;
      const bool hit = solve(f, p).best_unsat == optimum;
      successful_runs += hit;
      any = any || hit;
      p.clause_sel = ClauseSelection::RS;
      successful_rs_runs += solve(f, p).best_unsat == optimum;
    }
    solved_instances += any;
  }
  const int total = kInstances * kSeeds;
  const double rate = static_cast<double>(successful_runs) / total;
  return {solved_instances == kInstances && rate >= 0.90,
          format("best-of-10 optimal on %d/%d instances; %d/%d runs optimal (%.1f%%); "
                 "with RS selection %d/%d runs",
                 solved_instances, kInstances, successful_runs, total, 100 * rate,
                 successful_rs_runs, total)};
}

// 5. Threshold analysis values.
Outcome theory_values() {
  const double threshold = theory::constant_violation_threshold();
  const double h = theory::h_of_r(21.5);
  const double exponent = theory::exponent_per_clause(21.5, 0.972);
  const double target_exponent = std::log2(1.913) / 21.5;
  const double gap = theory::hamming_gap(21.5, 0.972, 1000.0) / 1000.0;
  const bool pass = threshold >= 5.19 && threshold <= 5.20 && std::abs(h - 0.979) <= 0.001 &&
                    std::abs(exponent - target_exponent) <= 0.002 && std::abs(gap - 0.064) <= 0.003;
  return {pass, format("threshold %.6f, h(21.5) %.6f, exponent %.6f (target %.6f), gap/n %.5f",
                       threshold, h, exponent, target_exponent, gap)};
}

// 6. Monte-Carlo estimate of the first-moment expectation.
Outcome monte_carlo() {
  const auto e = theory::estimate_product_form(8, 24, 22, 20000, 6);
  const double expect = std::exp2(theory::log2_expected_count(8, 24, 22));
  const double z = (e.mean - expect) / e.std_error;
  return {std::abs(z) <= 3.0, format("mean %.3f +- %.3f over %llu formulas, expected %.3f (z = %.2f)",
                                     e.mean, e.std_error,
                                     static_cast<unsigned long long>(e.samples), expect, z)};
}

// 7. Pickers sample their stated distributions.
Outcome selection_distributions() {
  constexpr int kDraws = 100000;
  double worst = 0.0;
  auto tally = [&](auto& picker, const SearchState& s, ClauseId c, Rng& rng,
                   const std::vector<double>& expect) {
    const auto lits = s.formula().clause(c);
    std::vector<std::uint64_t> counts(lits.size(), 0);
    for (int i = 0; i < kDraws; ++i) {
      const Var v = picker(c, s, rng);
      for (std::size_t j = 0; j < lits.size(); ++j) counts[j] += lits[j].var() == v;
    }
    worst = std::max(worst, testing::total_variation(counts, expect));
  };

  for (std::uint32_t i = 0; i < 10; ++i) {
    const Formula f = generate({.n = 40, .m = 160 + 40 * i, .k = 3, .seed = 7000 + i});
    Rng rng(i);
    const SearchState s(f, random_assignment(f.num_vars(), rng), CacheScheme::MCBC,
                        ClauseSelection::SBFS, max_tail_for(f, 4.5));
    ClauseId c = 0;
    while (!s.is_unsat(c)) ++c;

    std::vector<MakeBreak> mb;
    for (Literal l : f.clause(c)) mb.push_back(brute_force_make_break(f, s.assignment(), l.var()));
    const double k = static_cast<double>(mb.size());

    // Informed branch with moderate exponents so no probability is degenerate.
    SolverParams p;
    p.zeta = 1.5 + 0.2 * i;
    p.eta = -1.0 - 0.1 * i;
    std::vector<double> expect;
    double tau = 0;
    for (const auto& x : mb) {
      expect.push_back(std::pow(x.make, p.zeta) * std::pow(1.0 + x.brk, p.eta));
      tau += expect.back();
    }
    for (double& x : expect) x /= tau;
    PromsPicker informed(p);
    tally(informed, s, c, rng, expect);

    p.delta = tau * 2;
    PromsPicker uniform(p);
    tally(uniform, s, c, rng, std::vector<double>(mb.size(), 1.0 / k));

    const BaselineParams bp;
    std::vector<double> probsat;
    double total = 0;
    for (const auto& x : mb) {
      probsat.push_back(std::pow(bp.cb + x.brk, -bp.k));
      total += probsat.back();
    }
    for (double& x : probsat) x /= total;
    ProbSatPicker ps(bp);
    tally(ps, s, c, rng, probsat);

    std::uint32_t min_break = UINT32_MAX;
    for (const auto& x : mb) min_break = std::min(min_break, x.brk);
    const double ties = static_cast<double>(
        std::count_if(mb.begin(), mb.end(), [&](const MakeBreak& x) { return x.brk == min_break; }));
    const double walk = min_break > 0 ? bp.noise : 0.0;
    std::vector<double> walksat;
    for (const auto& x : mb) walksat.push_back(walk / k + (x.brk == min_break ? (1 - walk) / ties : 0.0));
    WalkSatPicker ws(bp);
    tally(ws, s, c, rng, walksat);
  }
  return {worst < 0.01, format("40 distributions x %d draws, worst total variation %.5f", kDraws, worst)};
}

// 8. Second-best FIFO selection is not slower than random selection. Runs
// that miss the reference within the cap count as the cap, which can only
// understate the slower variant's mean.
Outcome sbfs_vs_rs() {
  constexpr int kInstances = 20;
  constexpr int kRunsPerInstance = 50;
  constexpr std::uint64_t kCap = 1'000'000;
  double steps_sbfs = 0;
  double steps_rs = 0;
  int capped_sbfs = 0;
  int capped_rs = 0;
  for (int inst = 0; inst < kInstances; ++inst) {
    const Formula f = generate({.n = 50, .m = 325, .k = 3, .seed = 8000 + static_cast<std::uint64_t>(inst)});
    // Reference: best over ten long runs, split between the two selections.
    SolverParams ref = default_params(f);
    ref.max_steps = 2'000'000;
    std::size_t reference = f.num_clauses();
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      ref.seed = 900000 + seed;
      ref.clause_sel = seed % 2 ? ClauseSelection::RS : ClauseSelection::SBFS;
      reference = std::min(reference, solve(f, ref).best_unsat);
    }
    for (int run = 0; run < kRunsPerInstance; ++run) {
      for (ClauseSelection sel : {ClauseSelection::SBFS, ClauseSelection::RS}) {
        SolverParams p = default_params(f);
        p.clause_sel = sel;
        p.seed = static_cast<std::uint64_t>(inst * 100000 + run);
        p.max_steps = kCap;
        p.target_unsat = reference;
        const RunResult r = solve(f, p);
        const bool reached = r.best_unsat == reference;
        const double steps = reached ? static_cast<double>(r.best_step) : static_cast<double>(kCap);
        if (sel == ClauseSelection::SBFS) {
          steps_sbfs += steps;
          capped_sbfs += !reached;
        } else {
          steps_rs += steps;
          capped_rs += !reached;
        }
      }
    }
  }
  const double runs = kInstances * kRunsPerInstance;
  const double mean_sbfs = steps_sbfs / runs;
  const double mean_rs = steps_rs / runs;
  return {mean_sbfs <= 1.05 * mean_rs,
          format("%d runs each; mean steps to reference SBFS %.1f, RS %.1f (ratio %.3f); "
                 "capped at %llu steps: SBFS %d, RS %d",
                 kInstances * kRunsPerInstance, mean_sbfs, mean_rs, mean_sbfs / mean_rs,
                 static_cast<unsigned long long>(kCap), capped_sbfs, capped_rs)};
}

// 9. Defragmentations per 1000 steps with the default m_max = 4.5 m.
Outcome defragmentation_rate() {
  double worst = 0.0;
  double total_defrag = 0;
  double total_steps = 0;
  for (std::uint32_t i = 0; i < 5; ++i) {
    const std::uint32_t n = 100 + 50 * i;
    const Formula f = generate({.n = n, .m = 10 * n, .k = 3, .seed = 9000 + i});
    SolverParams p = default_params(f);
    p.max_steps = 200000;
    p.seed = i + 1;
    const RunResult r = solve(f, p);
    const double rate = 1000.0 * static_cast<double>(r.defragmentations) / static_cast<double>(r.steps);
    worst = std::max(worst, rate);
    total_defrag += static_cast<double>(r.defragmentations);
    total_steps += static_cast<double>(r.steps);
  }
  return {worst <= 150.0, format("5 ratio-10 instances; worst %.2f, overall %.2f defragmentations per 1000 steps",
                                 worst, 1000.0 * total_defrag / total_steps)};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// 10. Table format on fixtures, and ProMS against probSAT on a generated class.
Outcome harness_and_comparison() {
  const std::string dir = PROMS_FIXTURE_DIR;
  std::ifstream runs(dir + "/sample_runs.jsonl");
  const auto records = bench::parse_jsonl(runs);
  const auto optima = bench::read_optima_file(dir + "/sample_optima.txt");
  const bool golden = bench::render_table(bench::summarize(records)) == slurp(dir + "/sample_table.txt") &&
                      bench::render_table(bench::summarize(records, optima)) ==
                          slurp(dir + "/sample_table_optima.txt");

  std::vector<bench::Instance> instances;
  for (std::uint64_t i = 0; i < 20; ++i) {
    instances.push_back({"s3v70c1000-" + std::to_string(i + 1), "s3v70c1000",
                         generate({.n = 70, .m = 1000, .k = 3, .seed = 10000 + i})});
  }
  bench::BenchConfig cfg;
  cfg.solvers = {bench::SolverKind::ProMS, bench::SolverKind::ProbSAT};
  cfg.runs = 20;
  cfg.cutoff_seconds = 10.0;
  const auto summary = bench::summarize(bench::run_bench(instances, cfg));
  const auto* proms = summary.find("s3v70c1000", "proms");
  const auto* probsat = summary.find("s3v70c1000", "probsat");
  const bool dominates = proms->opt <= probsat->opt;
  std::printf("%s", bench::render_table(summary).c_str());
  return {golden && dominates,
          format("golden tables %s; opt-average ProMS %.2f vs probSAT %.2f, avg %.2f vs %.2f",
                 golden ? "match" : "DIFFER", proms->opt, probsat->opt, proms->avg, probsat->avg)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"oracle equivalence", oracle_equivalence},
      {"scheme determinism", scheme_determinism},
      {"buffer invariants", buffer_invariants},
      {"tiny-instance optimality", tiny_optimality},
      {"theory values", theory_values},
      {"Monte-Carlo first moment", monte_carlo},
      {"selection distributions", selection_distributions},
      {"SBFS vs RS steps", sbfs_vs_rs},
      {"defragmentation rate", defragmentation_rate},
      {"table format and probSAT comparison", harness_and_comparison},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int number = static_cast<int>(i + 1);
    if (!selected.empty() && !selected.count(number)) continue;
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = criteria[i].second();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d %-36s %s  %s [%.1f s]\n", number, criteria[i].first,
                o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
