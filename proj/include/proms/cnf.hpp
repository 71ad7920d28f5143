#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "proms/rng.hpp"

namespace proms {

using Var = std::uint32_t;
using ClauseId = std::uint32_t;

/// A variable together with a polarity. Variables are 0-based; the DIMACS
/// 1-based numbering only exists at the parser boundary.
class Literal {
 public:
  constexpr Literal() = default;
  constexpr Literal(Var var, bool negative) : code_(var * 2 + (negative ? 1 : 0)) {}

  static constexpr Literal from_code(std::uint32_t code) {
    Literal l;
    l.code_ = code;
    return l;
  }

  constexpr Var var() const { return code_ >> 1; }
  constexpr bool negative() const { return (code_ & 1) != 0; }
  /// Dense index 2*var + sign, used to address occurrence lists.
  constexpr std::uint32_t code() const { return code_; }
  constexpr Literal operator~() const { return from_code(code_ ^ 1); }

  /// DIMACS integer (nonzero) to literal.
  static constexpr Literal from_dimacs(long long value) {
    return value > 0 ? Literal(static_cast<Var>(value - 1), false)
                     : Literal(static_cast<Var>(-value - 1), true);
  }
  constexpr long long to_dimacs() const {
    const auto v = static_cast<long long>(var()) + 1;
    return negative() ? -v : v;
  }

  constexpr auto operator<=>(const Literal&) const = default;

 private:
  std::uint32_t code_ = 0;
};

/// Complete truth assignment: one 0/1 value per variable.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t num_vars) : values_(num_vars, 0) {}
  explicit Assignment(std::vector<std::uint8_t> values) : values_(std::move(values)) {
    for (auto& v : values_) v = v ? 1 : 0;
  }

  std::size_t size() const { return values_.size(); }
  bool operator[](Var v) const { return values_[v] != 0; }
  void set(Var v, bool value) { values_[v] = value ? 1 : 0; }
  void flip(Var v) { values_[v] ^= 1; }

  bool satisfies(Literal l) const { return values_[l.var()] != (l.negative() ? 1 : 0); }

  std::span<const std::uint8_t> values() const { return values_; }

  bool operator==(const Assignment&) const = default;

 private:
  std::vector<std::uint8_t> values_;
};

/// Raised when a clause list does not describe a valid formula.
class FormulaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable CNF formula with per-literal occurrence lists.
///
/// Clauses are stored back to back in one literal array; occurrence lists are
/// the exact inverse (clause ids in increasing order for every literal).
/// No clause contains a variable twice, so a flip touches each clause at most
/// once through either occurrence list of the flipped variable.
class Formula {
 public:
  /// Throws FormulaError on num_vars == 0, an empty clause, a literal out of
  /// range, or a repeated variable inside one clause.
  Formula(Var num_vars, const std::vector<std::vector<Literal>>& clauses);

  Var num_vars() const { return num_vars_; }
  std::size_t num_clauses() const { return clause_begin_.size() - 1; }
  /// Clause-to-variable ratio m/n.
  double ratio() const {
    return static_cast<double>(num_clauses()) / static_cast<double>(num_vars_);
  }

  std::span<const Literal> clause(ClauseId c) const {
    return {literals_.data() + clause_begin_[c], clause_begin_[c + 1] - clause_begin_[c]};
  }
  std::span<const ClauseId> occurrences(Literal l) const {
    return {occ_.data() + occ_begin_[l.code()], occ_begin_[l.code() + 1] - occ_begin_[l.code()]};
  }

  std::size_t total_literals() const { return literals_.size(); }
  std::size_t max_clause_size() const { return max_clause_size_; }

  bool operator==(const Formula& other) const {
    return num_vars_ == other.num_vars_ && clause_begin_ == other.clause_begin_ &&
           literals_ == other.literals_;
  }

 private:
  Var num_vars_;
  std::size_t max_clause_size_ = 0;
  std::vector<Literal> literals_;
  std::vector<std::size_t> clause_begin_;
  std::vector<ClauseId> occ_;
  std::vector<std::size_t> occ_begin_;
};

/// Each variable is an independent fair coin, drawn in variable order.
Assignment random_assignment(std::size_t num_vars, Rng& rng);

bool clause_satisfied(const Formula& f, const Assignment& a, ClauseId c);

/// Number of clauses with no true literal. Full scan.
std::size_t count_unsat(const Formula& f, const Assignment& a);

}  // namespace proms
