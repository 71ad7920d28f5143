#pragma once

#include <cstddef>
#include <cstdint>

#include "proms/cnf.hpp"

namespace proms {

struct MakeBreak {
  std::uint32_t make = 0;
  std::uint32_t brk = 0;
  bool operator==(const MakeBreak&) const = default;
};

/// Make and break of `v` by rescanning every clause before and after the flip.
/// Slow on purpose: this is the ground truth for the incremental state.
MakeBreak brute_force_make_break(const Formula& f, const Assignment& a, Var v);

inline constexpr Var kMaxEnumerationVars = 24;

/// Minimum unsatisfied-clause count over all 2^n assignments.
/// Bit-parallel clause test, assignments split across OpenMP threads.
/// Throws std::invalid_argument when n > kMaxEnumerationVars.
std::size_t brute_force_optimum(const Formula& f);

/// Serial reference: plain lexicographic enumeration through count_unsat.
std::size_t brute_force_optimum_serial(const Formula& f);

}  // namespace proms
