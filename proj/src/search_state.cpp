#include "proms/search_state.hpp"

namespace proms {

std::string_view to_string(CacheScheme s) {
  switch (s) {
    case CacheScheme::MCBC: return "mcbc";
    case CacheScheme::MCBN: return "mcbn";
    case CacheScheme::MNBC: return "mnbc";
    case CacheScheme::MNBN: return "mnbn";
  }
  return "?";
}

std::string_view to_string(ClauseSelection s) {
  switch (s) {
    case ClauseSelection::SBFS: return "sbfs";
    case ClauseSelection::PBFS: return "pbfs";
    case ClauseSelection::RS: return "rs";
  }
  return "?";
}

std::optional<CacheScheme> parse_cache_scheme(std::string_view name) {
  for (CacheScheme s : kAllSchemes) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::optional<ClauseSelection> parse_clause_selection(std::string_view name) {
  for (auto s : {ClauseSelection::SBFS, ClauseSelection::PBFS, ClauseSelection::RS}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

namespace {

// The literal of v that is true under a.
Literal true_literal(const Assignment& a, Var v) { return Literal(v, !a[v]); }

}  // namespace

SearchState::SearchState(const Formula& f, Assignment initial, CacheScheme scheme,
                         ClauseSelection selection, std::size_t max_tail)
    : formula_(&f),
      assignment_(std::move(initial)),
      scheme_(scheme),
      selection_(selection),
      cache_make_(caches_make(scheme)),
      cache_break_(caches_break(scheme)),
      true_count_(f.num_clauses(), 0),
      crit_xor_(f.num_clauses(), 0),
      make_(cache_make_ ? f.num_vars() : 0, 0),
      break_(cache_break_ ? f.num_vars() : 0, 0) {
  if (selection_ == ClauseSelection::SBFS) {
    slotted_ = SlottedUnsatBuffer(f.num_clauses(), max_tail);
  } else {
    dense_ = DenseUnsatBuffer(f.num_clauses());
  }

  for (ClauseId c = 0; c < f.num_clauses(); ++c) {
    std::uint32_t count = 0;
    Var crit = 0;
    for (Literal l : f.clause(c)) {
      if (assignment_.satisfies(l)) {
        ++count;
        crit ^= l.var();
      }
    }
    true_count_[c] = count;
    if (cache_break_) crit_xor_[c] = crit;
    if (count == 0) {
      buffer_insert(c);
      if (cache_make_) {
        for (Literal l : f.clause(c)) ++make_[l.var()];
      }
    } else if (count == 1 && cache_break_) {
      ++break_[crit];
    }
  }

  best_unsat_ = unsat_count();
  best_assignment_ = assignment_;
}

void SearchState::buffer_insert(ClauseId c) {
  if (selection_ == ClauseSelection::SBFS) {
    slotted_.insert(c);
  } else {
    dense_.insert(c);
  }
}

void SearchState::buffer_remove(ClauseId c) {
  if (selection_ == ClauseSelection::SBFS) {
    slotted_.remove(c);
  } else {
    dense_.remove(c);
  }
}

// Clause c gained a true literal (of variable v).
void SearchState::make_satisfied(ClauseId c, Var v) {
  const std::uint32_t count = ++true_count_[c];
  ++transitions_.total;
  if (count == 1) {
    ++transitions_.make_affecting;
    ++transitions_.break_affecting;
    buffer_remove(c);
    if (cache_make_) {
      for (Literal l : formula_->clause(c)) --make_[l.var()];
    }
    if (cache_break_) {
      ++break_[v];
      crit_xor_[c] = v;
    }
  } else if (count == 2) {
    ++transitions_.break_affecting;
    if (cache_break_) {
      --break_[crit_xor_[c]];
      crit_xor_[c] ^= v;
    }
  } else if (cache_break_) {
    crit_xor_[c] ^= v;
  }
}

// Clause c lost a true literal (of variable v).
void SearchState::make_unsatisfied(ClauseId c, Var v) {
  const std::uint32_t count = --true_count_[c];
  ++transitions_.total;
  if (count == 0) {
    ++transitions_.make_affecting;
    ++transitions_.break_affecting;
    buffer_insert(c);
    if (cache_make_) {
      for (Literal l : formula_->clause(c)) ++make_[l.var()];
    }
    if (cache_break_) {
      --break_[v];
      crit_xor_[c] = 0;
    }
  } else if (count == 1) {
    ++transitions_.break_affecting;
    if (cache_break_) {
      crit_xor_[c] ^= v;
      ++break_[crit_xor_[c]];
    }
  } else if (cache_break_) {
    crit_xor_[c] ^= v;
  }
}

void SearchState::flip(Var v) {
  const Literal was_true = true_literal(assignment_, v);
  assignment_.flip(v);
  for (ClauseId c : formula_->occurrences(~was_true)) make_satisfied(c, v);
  for (ClauseId c : formula_->occurrences(was_true)) make_unsatisfied(c, v);

  if (unsat_count() < best_unsat_) {
    best_unsat_ = unsat_count();
    best_assignment_ = assignment_;
    ++improvements_;
  }
}

std::uint32_t SearchState::make_value(Var v) const {
  if (cache_make_) return make_[v];
  std::uint32_t make = 0;
  for (ClauseId c : formula_->occurrences(~true_literal(assignment_, v))) {
    if (true_count_[c] == 0) ++make;
  }
  return make;
}

std::uint32_t SearchState::break_value(Var v) const {
  if (cache_break_) return break_[v];
  // v's literal is true in every clause of this list, so a count of one means
  // v is the sole satisfier.
  std::uint32_t brk = 0;
  for (ClauseId c : formula_->occurrences(true_literal(assignment_, v))) {
    if (true_count_[c] == 1) ++brk;
  }
  return brk;
}

ClauseId SearchState::pick_clause(Rng& rng) {
  switch (selection_) {
    case ClauseSelection::SBFS: return slotted_.pick();
    case ClauseSelection::PBFS: return dense_.pick_sequential();
    case ClauseSelection::RS: return dense_.pick_random(rng);
  }
  return dense_.pick_random(rng);
}

}  // namespace proms
