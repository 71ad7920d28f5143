#include "proms/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "proms/local_search.hpp"

namespace proms {

void SolverParams::validate() const {
  if (max_steps == 0) throw std::invalid_argument("max_steps must be at least 1");
  if (!(m_max_factor >= 1.0)) throw std::invalid_argument("m_max_factor must be at least 1");
  if (!(delta >= 0.0)) throw std::invalid_argument("delta must be non-negative");
  if (cutoff_seconds && !(*cutoff_seconds > 0.0)) {
    throw std::invalid_argument("cutoff must be positive");
  }
}

SolverParams default_params(const Formula& f) {
  const double r = f.ratio();
  SolverParams p;
  p.eta = -2.5;
  p.zeta = r + 17.5;
  p.delta = std::max(0.0, 0.4 * r - 1.4);
  p.m_max_factor = 4.5;
  return p;
}

std::size_t max_tail_for(const Formula& f, double m_max_factor) {
  const double limit = m_max_factor * static_cast<double>(f.num_clauses());
  return std::max<std::size_t>(1, static_cast<std::size_t>(limit));
}

double score(std::uint32_t make, std::uint32_t brk, const SolverParams& p) {
  return std::pow(static_cast<double>(make), p.zeta) *
         std::pow(p.break_base + static_cast<double>(brk), p.eta);
}

double score(const SearchState& state, Var v, const SolverParams& p) {
  return score(state.make_value(v), state.break_value(v), p);
}

PromsPicker::PromsPicker(const SolverParams& params) : params_(params) {
  for (std::uint32_t i = 0; i < kTable; ++i) {
    make_pow_[i] = std::pow(static_cast<double>(i), params_.zeta);
    break_pow_[i] = std::pow(params_.break_base + static_cast<double>(i), params_.eta);
  }
}

double PromsPicker::cached_score(std::uint32_t make, std::uint32_t brk) const {
  const double mp = make < kTable ? make_pow_[make] : std::pow(static_cast<double>(make), params_.zeta);
  const double bp = brk < kTable ? break_pow_[brk]
                                 : std::pow(params_.break_base + static_cast<double>(brk), params_.eta);
  return mp * bp;
}

Var PromsPicker::operator()(ClauseId c, const SearchState& state, Rng& rng) {
  const auto lits = state.formula().clause(c);
  scratch_.resize(lits.size());
  double tau = 0.0;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    const Var v = lits[i].var();
    scratch_[i] = cached_score(state.make_value(v), state.break_value(v));
    tau += scratch_[i];
  }

  const double u = rng.uniform();
  last_random_ = !(tau > params_.delta);
  if (last_random_) {
    const auto i = std::min(static_cast<std::size_t>(u * static_cast<double>(lits.size())), lits.size() - 1);
    return lits[i].var();
  }
  if (std::isinf(tau)) {
    const auto best = std::max_element(scratch_.begin(), scratch_.end());
    return lits[static_cast<std::size_t>(best - scratch_.begin())].var();
  }
  const double target = u * tau;
  double running = 0.0;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    running += scratch_[i];
    if (target < running) return lits[i].var();
  }
  // Rounding left target at or past the accumulated total: take the last
  // variable with a positive score.
  for (std::size_t i = lits.size(); i-- > 0;) {
    if (scratch_[i] > 0.0) return lits[i].var();
  }
  return lits.back().var();
}

std::vector<double> PromsPicker::probabilities(ClauseId c, const SearchState& state) const {
  const auto lits = state.formula().clause(c);
  std::vector<double> p(lits.size());
  double tau = 0.0;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    p[i] = cached_score(state.make_value(lits[i].var()), state.break_value(lits[i].var()));
    tau += p[i];
  }
  if (!(tau > params_.delta)) {
    std::fill(p.begin(), p.end(), 1.0 / static_cast<double>(lits.size()));
  } else if (std::isinf(tau)) {
    const auto best = std::max_element(p.begin(), p.end()) - p.begin();
    std::fill(p.begin(), p.end(), 0.0);
    p[static_cast<std::size_t>(best)] = 1.0;
  } else {
    for (double& x : p) x /= tau;
  }
  return p;
}

RunResult solve(const Formula& f, const SolverParams& params, std::vector<Var>* trace) {
  PromsPicker picker(params);
  return run_local_search(f, params, picker, trace);
}

}  // namespace proms
