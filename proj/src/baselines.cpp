#include "proms/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "proms/local_search.hpp"

namespace proms {

void BaselineParams::validate() const {
  if (!(k > 0.0)) throw std::invalid_argument("probSAT exponent k must be positive");
  if (!(cb > 0.0)) throw std::invalid_argument("probSAT break base cb must be positive");
  if (!(noise >= 0.0 && noise <= 1.0)) throw std::invalid_argument("noise must lie in [0, 1]");
}

ProbSatPicker::ProbSatPicker(const BaselineParams& params) : params_(params) {
  params_.validate();
  table_.resize(64);
  for (std::size_t b = 0; b < table_.size(); ++b) {
    table_[b] = std::pow(params_.cb + static_cast<double>(b), -params_.k);
  }
}

double ProbSatPicker::weight(std::uint32_t brk) const {
  return brk < table_.size() ? table_[brk] : std::pow(params_.cb + static_cast<double>(brk), -params_.k);
}

Var ProbSatPicker::operator()(ClauseId c, const SearchState& state, Rng& rng) {
  const auto lits = state.formula().clause(c);
  scratch_.resize(lits.size());
  double total = 0.0;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    scratch_[i] = weight(state.break_value(lits[i].var()));
    total += scratch_[i];
  }
  const double target = rng.uniform() * total;
  double running = 0.0;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    running += scratch_[i];
    if (target < running) return lits[i].var();
  }
  return lits.back().var();
}

std::vector<double> ProbSatPicker::probabilities(ClauseId c, const SearchState& state) const {
  const auto lits = state.formula().clause(c);
  std::vector<double> p(lits.size());
  double total = 0.0;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    p[i] = weight(state.break_value(lits[i].var()));
    total += p[i];
  }
  for (double& x : p) x /= total;
  return p;
}

WalkSatPicker::WalkSatPicker(const BaselineParams& params) : params_(params) {
  params_.validate();
}

Var WalkSatPicker::operator()(ClauseId c, const SearchState& state, Rng& rng) {
  const auto lits = state.formula().clause(c);
  candidates_.clear();
  std::uint32_t min_break = std::numeric_limits<std::uint32_t>::max();
  for (Literal l : lits) {
    const std::uint32_t b = state.break_value(l.var());
    if (b < min_break) {
      min_break = b;
      candidates_.clear();
    }
    if (b == min_break) candidates_.push_back(l.var());
  }
  if (min_break > 0 && rng.uniform() < params_.noise) {
    return lits[rng.below(lits.size())].var();
  }
  return candidates_[rng.below(candidates_.size())];
}

std::vector<double> WalkSatPicker::probabilities(ClauseId c, const SearchState& state) const {
  const auto lits = state.formula().clause(c);
  std::vector<std::uint32_t> breaks(lits.size());
  for (std::size_t i = 0; i < lits.size(); ++i) breaks[i] = state.break_value(lits[i].var());
  const std::uint32_t min_break = *std::min_element(breaks.begin(), breaks.end());
  const auto ties = static_cast<double>(std::count(breaks.begin(), breaks.end(), min_break));
  const double walk = min_break > 0 ? params_.noise : 0.0;
  std::vector<double> p(lits.size());
  for (std::size_t i = 0; i < lits.size(); ++i) {
    p[i] = walk / static_cast<double>(lits.size());
    if (breaks[i] == min_break) p[i] += (1.0 - walk) / ties;
  }
  return p;
}

RunResult solve_probsat(const Formula& f, const SolverParams& loop, const BaselineParams& params,
                        std::vector<Var>* trace) {
  ProbSatPicker picker(params);
  return run_local_search(f, loop, picker, trace);
}

RunResult solve_walksat(const Formula& f, const SolverParams& loop, const BaselineParams& params,
                        std::vector<Var>* trace) {
  WalkSatPicker picker(params);
  return run_local_search(f, loop, picker, trace);
}

}  // namespace proms
