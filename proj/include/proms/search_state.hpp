#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "proms/cnf.hpp"
#include "proms/rng.hpp"
#include "proms/unsat_buffer.hpp"

namespace proms {

/// Which of make / break are maintained incrementally ("C") and which are
/// recomputed on demand ("N").
enum class CacheScheme { MCBC, MCBN, MNBC, MNBN };

enum class ClauseSelection { SBFS, PBFS, RS };

constexpr bool caches_make(CacheScheme s) {
  return s == CacheScheme::MCBC || s == CacheScheme::MCBN;
}
constexpr bool caches_break(CacheScheme s) {
  return s == CacheScheme::MCBC || s == CacheScheme::MNBC;
}

inline constexpr CacheScheme kAllSchemes[] = {CacheScheme::MCBC, CacheScheme::MCBN,
                                              CacheScheme::MNBC, CacheScheme::MNBN};

std::string_view to_string(CacheScheme s);
std::string_view to_string(ClauseSelection s);
std::optional<CacheScheme> parse_cache_scheme(std::string_view name);
std::optional<ClauseSelection> parse_clause_selection(std::string_view name);

/// True-literal-count transitions seen by flip().
struct TransitionStats {
  std::uint64_t total = 0;
  /// 0->1 and 1->0: the transitions that change make values.
  std::uint64_t make_affecting = 0;
  /// 0->1, 1->0, 1->2, 2->1: the transitions that change break values.
  std::uint64_t break_affecting = 0;
};

/// Incremental local-search state over one formula.
///
/// Per clause it keeps the number of true literals and, when break values are
/// cached, the XOR of the variables of its true literals (so the sole
/// satisfying variable of a critical clause is known without a scan). The
/// unsatisfied clauses live in the buffer matching the selection strategy.
/// The incumbent (best assignment seen so far) is updated on every strict
/// improvement.
class SearchState {
 public:
  SearchState(const Formula& f, Assignment initial, CacheScheme scheme,
              ClauseSelection selection, std::size_t max_tail);

  void flip(Var v);

  std::uint32_t make_value(Var v) const;
  std::uint32_t break_value(Var v) const;

  /// Requires unsat_count() > 0.
  ClauseId pick_clause(Rng& rng);

  const Formula& formula() const { return *formula_; }
  const Assignment& assignment() const { return assignment_; }
  CacheScheme scheme() const { return scheme_; }
  ClauseSelection selection() const { return selection_; }

  std::size_t unsat_count() const {
    return selection_ == ClauseSelection::SBFS ? slotted_.size() : dense_.size();
  }
  bool is_unsat(ClauseId c) const {
    return selection_ == ClauseSelection::SBFS ? slotted_.contains(c) : dense_.contains(c);
  }
  std::uint32_t true_count(ClauseId c) const { return true_count_[c]; }
  /// XOR of true-literal variables; only maintained when break is cached.
  Var critical_xor(ClauseId c) const { return crit_xor_[c]; }

  std::size_t best_unsat() const { return best_unsat_; }
  const Assignment& best_assignment() const { return best_assignment_; }
  std::uint64_t improvements() const { return improvements_; }

  const TransitionStats& transitions() const { return transitions_; }
  std::uint64_t defragmentations() const { return slotted_.defragmentations(); }

  const SlottedUnsatBuffer& slotted_buffer() const { return slotted_; }
  const DenseUnsatBuffer& dense_buffer() const { return dense_; }

 private:
  void buffer_insert(ClauseId c);
  void buffer_remove(ClauseId c);
  void make_satisfied(ClauseId c, Var v);
  void make_unsatisfied(ClauseId c, Var v);

  const Formula* formula_;
  Assignment assignment_;
  CacheScheme scheme_;
  ClauseSelection selection_;
  bool cache_make_;
  bool cache_break_;

  std::vector<std::uint32_t> true_count_;
  std::vector<Var> crit_xor_;
  std::vector<std::uint32_t> make_;
  std::vector<std::uint32_t> break_;

  SlottedUnsatBuffer slotted_;
  DenseUnsatBuffer dense_;

  std::size_t best_unsat_ = 0;
  Assignment best_assignment_;
  std::uint64_t improvements_ = 0;
  TransitionStats transitions_;
};

}  // namespace proms
