#include "proms/oracle.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace proms {

namespace {

void check_enumerable(const Formula& f) {
  if (f.num_vars() > kMaxEnumerationVars) {
    throw std::invalid_argument("brute force enumeration limited to " +
                                std::to_string(kMaxEnumerationVars) + " variables, got " +
                                std::to_string(f.num_vars()));
  }
}

}  // namespace

MakeBreak brute_force_make_break(const Formula& f, const Assignment& a, Var v) {
  Assignment flipped = a;
  flipped.flip(v);
  MakeBreak mb;
  for (ClauseId c = 0; c < f.num_clauses(); ++c) {
    const bool before = clause_satisfied(f, a, c);
    const bool after = clause_satisfied(f, flipped, c);
    if (!before && after) ++mb.make;
    if (before && !after) ++mb.brk;
  }
  return mb;
}

std::size_t brute_force_optimum(const Formula& f) {
  check_enumerable(f);
  struct Masks {
    std::uint32_t pos = 0;
    std::uint32_t neg = 0;
  };
  std::vector<Masks> masks(f.num_clauses());
  for (ClauseId c = 0; c < f.num_clauses(); ++c) {
    for (Literal l : f.clause(c)) {
      (l.negative() ? masks[c].neg : masks[c].pos) |= 1u << l.var();
    }
  }

  const std::int64_t total = std::int64_t{1} << f.num_vars();
  const std::size_t m = masks.size();
  std::size_t best = m;
#pragma omp parallel for schedule(static) reduction(min : best)
  for (std::int64_t bits = 0; bits < total; ++bits) {
    const auto a = static_cast<std::uint32_t>(bits);
    std::size_t unsat = 0;
    for (std::size_t c = 0; c < m && unsat < best; ++c) {
      if (((a & masks[c].pos) | (~a & masks[c].neg)) == 0) ++unsat;
    }
    if (unsat < best) best = unsat;
  }
  return best;
}

std::size_t brute_force_optimum_serial(const Formula& f) {
  check_enumerable(f);
  const Var n = f.num_vars();
  Assignment a(n);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (Var v = 0; v < n; ++v) a.set(v, ((bits >> v) & 1) != 0);
    best = std::min(best, count_unsat(f, a));
  }
  return best;
}

}  // namespace proms
