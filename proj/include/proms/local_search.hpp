#pragma once

#include <chrono>
#include <vector>

#include "proms/cnf.hpp"
#include "proms/rng.hpp"
#include "proms/search_state.hpp"
#include "proms/solver.hpp"

namespace proms {

/// Generic flip loop shared by ProMS and the baselines.
///
/// Random initial assignment, then per step: pick an unsatisfied clause,
/// ask `picker(clause, state, rng)` for a variable, flip it. The incumbent is
/// kept by the state; the wall clock is sampled on every improvement and
/// every 1024 steps for the cutoff check.
template <class Picker>
RunResult run_local_search(const Formula& f, const SolverParams& params, Picker& picker,
                           std::vector<Var>* trace = nullptr) {
  params.validate();
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };

  Rng rng(params.seed);
  SearchState state(f, random_assignment(f.num_vars(), rng), params.scheme, params.clause_sel,
                    max_tail_for(f, params.m_max_factor));

  RunResult result;
  std::uint64_t step = 0;
  std::uint64_t seen_improvements = 0;
  while (step < params.max_steps && state.unsat_count() > params.target_unsat) {
    if (params.cutoff_seconds && (step & 1023) == 0 && elapsed() >= *params.cutoff_seconds) break;
    const ClauseId c = state.pick_clause(rng);
    const Var v = picker(c, state, rng);
    state.flip(v);
    ++step;
    if (trace) trace->push_back(v);
    if (state.improvements() != seen_improvements) {
      seen_improvements = state.improvements();
      result.best_step = step;
      result.time_to_best = elapsed();
    }
  }

  result.wall_time = elapsed();
  result.steps = step;
  result.best_unsat = state.best_unsat();
  result.best_assignment = state.best_assignment();
  if (result.time_to_best > result.wall_time) result.time_to_best = result.wall_time;
  result.flips_per_second = result.wall_time > 0 ? static_cast<double>(step) / result.wall_time : 0.0;
  result.defragmentations = state.defragmentations();
  result.transitions = state.transitions();
  return result;
}

}  // namespace proms
