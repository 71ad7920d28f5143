#pragma once

#include <vector>

#include "proms/cnf.hpp"
#include "proms/rng.hpp"
#include "proms/search_state.hpp"
#include "proms/solver.hpp"

namespace proms {

struct BaselineParams {
  double cb = 0.9;       // probSAT break base
  double k = 2.06;       // probSAT exponent
  double noise = 0.567;  // WalkSAT random-walk probability

  /// Throws std::invalid_argument unless k > 0, cb > 0 and noise in [0, 1].
  void validate() const;
};

/// Break-only probability distribution: v with weight (cb + b(v))^-k.
class ProbSatPicker {
 public:
  explicit ProbSatPicker(const BaselineParams& params);
  Var operator()(ClauseId c, const SearchState& state, Rng& rng);
  std::vector<double> probabilities(ClauseId c, const SearchState& state) const;

 private:
  double weight(std::uint32_t brk) const;

  BaselineParams params_;
  std::vector<double> table_;
  std::vector<double> scratch_;
};

/// Classic WalkSAT: a zero-break variable if there is one (uniform among
/// them); otherwise a uniform variable with probability `noise`, else a
/// minimum-break variable (uniform among ties).
class WalkSatPicker {
 public:
  explicit WalkSatPicker(const BaselineParams& params);
  Var operator()(ClauseId c, const SearchState& state, Rng& rng);
  std::vector<double> probabilities(ClauseId c, const SearchState& state) const;

 private:
  BaselineParams params_;
  std::vector<Var> candidates_;
};

/// Search-loop fields of `loop` (budget, scheme, selection, seed, cutoff,
/// target) are used; the ProMS score fields are ignored.
RunResult solve_probsat(const Formula& f, const SolverParams& loop, const BaselineParams& params,
                        std::vector<Var>* trace = nullptr);
RunResult solve_walksat(const Formula& f, const SolverParams& loop, const BaselineParams& params,
                        std::vector<Var>* trace = nullptr);

}  // namespace proms
