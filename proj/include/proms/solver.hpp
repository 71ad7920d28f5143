#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "proms/cnf.hpp"
#include "proms/rng.hpp"
#include "proms/search_state.hpp"

namespace proms {

/// Parameters of one local-search run. The search-loop fields (budget,
/// scheme, selection, seed) are shared by every picker; zeta/eta/delta and
/// break_base only affect the ProMS picker.
struct SolverParams {
  double zeta = 17.5;  // make exponent
  double eta = -2.5;   // break exponent
  double delta = 0.0;  // clause-score threshold for the informed branch
  /// Base added to the break value inside the break factor, (base + b)^eta.
  /// 1.0 for ProMS. Other values exist only to line the score up with
  /// probSAT's (cb + b)^-k form in tests.
  double break_base = 1.0;

  std::uint64_t max_steps = std::numeric_limits<std::int64_t>::max();
  double m_max_factor = 4.5;
  CacheScheme scheme = CacheScheme::MCBN;
  ClauseSelection clause_sel = ClauseSelection::SBFS;
  std::uint64_t seed = 0;
  std::optional<double> cutoff_seconds;
  /// Stop as soon as the unsat count reaches this value (0 = satisfied).
  std::size_t target_unsat = 0;

  /// Throws std::invalid_argument on max_steps == 0, m_max_factor < 1,
  /// delta < 0 or a non-positive cutoff.
  void validate() const;
};

/// eta = -2.5, zeta = r + 17.5, delta = max(0, 0.4 r - 1.4), m_max factor 4.5.
SolverParams default_params(const Formula& f);

/// Defragmentation threshold on the slotted buffer's tail for formula f.
std::size_t max_tail_for(const Formula& f, double m_max_factor);

/// m^zeta * (base + b)^eta, evaluated in double precision.
double score(std::uint32_t make, std::uint32_t brk, const SolverParams& p);
double score(const SearchState& state, Var v, const SolverParams& p);

struct RunResult {
  std::size_t best_unsat = 0;
  Assignment best_assignment;
  std::uint64_t steps = 0;
  /// Step count at which best_unsat was first reached (0 = initial assignment).
  std::uint64_t best_step = 0;
  double wall_time = 0.0;
  double time_to_best = 0.0;
  double flips_per_second = 0.0;
  std::uint64_t defragmentations = 0;
  TransitionStats transitions;
};

/// Variable selection of ProMS for one unsatisfied clause.
///
/// tau = sum of scores over the clause. Above delta, variable v is drawn with
/// probability score(v)/tau from a single uniform against the running sum;
/// otherwise a uniform variable of the clause is taken. Both branches consume
/// exactly one random draw. If tau overflows, the first maximum-score
/// variable is taken.
class PromsPicker {
 public:
  explicit PromsPicker(const SolverParams& params);

  Var operator()(ClauseId c, const SearchState& state, Rng& rng);

  /// The exact selection distribution for clause c, in clause order.
  std::vector<double> probabilities(ClauseId c, const SearchState& state) const;

  /// Same value as score(), served from memo tables for small make/break.
  double cached_score(std::uint32_t make, std::uint32_t brk) const;

  bool last_pick_random() const { return last_random_; }

 private:
  static constexpr std::uint32_t kTable = 64;

  SolverParams params_;
  std::array<double, kTable> make_pow_{};
  std::array<double, kTable> break_pow_{};
  std::vector<double> scratch_;
  bool last_random_ = false;
};

/// Runs ProMS. Stops at max_steps, the cutoff, or target_unsat, whichever
/// comes first; always returns the incumbent. If `trace` is given every
/// flipped variable is appended to it.
RunResult solve(const Formula& f, const SolverParams& params, std::vector<Var>* trace = nullptr);

}  // namespace proms
