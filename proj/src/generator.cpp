#include "proms/generator.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "proms/rng.hpp"

namespace proms {

Formula generate(const GenSpec& spec) {
  if (spec.k == 0) throw std::invalid_argument("clause length k must be positive");
  if (spec.k > spec.n) throw std::invalid_argument("clause length k exceeds variable count n");

  Rng rng(spec.seed);
  std::vector<std::vector<Literal>> clauses(spec.m);
  for (auto& clause : clauses) {
    clause.reserve(spec.k);
    while (clause.size() < spec.k) {
      const auto v = static_cast<Var>(rng.below(spec.n));
      const bool taken = std::any_of(clause.begin(), clause.end(), [v](Literal l) { return l.var() == v; });
      if (taken) continue;
      clause.emplace_back(v, rng.coin());
    }
  }
  return Formula(spec.n, clauses);
}

}  // namespace proms
