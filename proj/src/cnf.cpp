#include "proms/cnf.hpp"

#include <algorithm>
#include <string>

namespace proms {

Formula::Formula(Var num_vars, const std::vector<std::vector<Literal>>& clauses)
    : num_vars_(num_vars) {
  if (num_vars == 0) throw FormulaError("formula needs at least one variable");

  clause_begin_.reserve(clauses.size() + 1);
  clause_begin_.push_back(0);
  std::vector<std::size_t> occ_count(2 * static_cast<std::size_t>(num_vars), 0);
  std::vector<std::uint32_t> seen(num_vars, 0);

  for (std::size_t c = 0; c < clauses.size(); ++c) {
    const auto& clause = clauses[c];
    if (clause.empty()) throw FormulaError("clause " + std::to_string(c + 1) + " is empty");
    const auto stamp = static_cast<std::uint32_t>(c + 1);
    for (Literal l : clause) {
      if (l.var() >= num_vars) {
        throw FormulaError("literal " + std::to_string(l.to_dimacs()) + " in clause " +
                           std::to_string(c + 1) + " is out of range");
      }
      if (seen[l.var()] == stamp) {
        throw FormulaError("variable " + std::to_string(l.var() + 1) +
                           " occurs more than once in clause " + std::to_string(c + 1));
      }
      seen[l.var()] = stamp;
      literals_.push_back(l);
      ++occ_count[l.code()];
    }
    max_clause_size_ = std::max(max_clause_size_, clause.size());
    clause_begin_.push_back(literals_.size());
  }

  occ_begin_.assign(occ_count.size() + 1, 0);
  for (std::size_t i = 0; i < occ_count.size(); ++i) occ_begin_[i + 1] = occ_begin_[i] + occ_count[i];
  occ_.resize(literals_.size());
  std::vector<std::size_t> fill(occ_begin_.begin(), occ_begin_.end() - 1);
  for (ClauseId c = 0; c < num_clauses(); ++c) {
    for (Literal l : clause(c)) occ_[fill[l.code()]++] = c;
  }
}

Assignment random_assignment(std::size_t num_vars, Rng& rng) {
  Assignment a(num_vars);
  for (std::size_t v = 0; v < num_vars; ++v) a.set(static_cast<Var>(v), rng.coin());
  return a;
}

bool clause_satisfied(const Formula& f, const Assignment& a, ClauseId c) {
  const auto lits = f.clause(c);
  return std::any_of(lits.begin(), lits.end(), [&](Literal l) { return a.satisfies(l); });
}

std::size_t count_unsat(const Formula& f, const Assignment& a) {
  std::size_t unsat = 0;
  for (ClauseId c = 0; c < f.num_clauses(); ++c) {
    if (!clause_satisfied(f, a, c)) ++unsat;
  }
  return unsat;
}

}  // namespace proms
