#pragma once

#include <cstdint>

#include "proms/cnf.hpp"

namespace proms {

/// Uniform random k-SAT: m clauses, each over k distinct variables with
/// independent fair signs.
struct GenSpec {
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  std::uint32_t k = 3;
  std::uint64_t seed = 0;
};

/// Deterministic for a given GenSpec. Per clause, variables are drawn one at a time with
/// Rng::below(n), redrawing any variable already in the clause, and each
/// accepted variable is immediately followed by one coin for its sign.
/// Duplicate clauses are allowed. Throws std::invalid_argument on k == 0 or
/// k > n.
Formula generate(const GenSpec& spec);

}  // namespace proms
