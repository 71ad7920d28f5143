#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "proms/cnf.hpp"
#include "proms/rng.hpp"

namespace proms {

inline constexpr ClauseId kEmptySlot = std::numeric_limits<ClauseId>::max();
inline constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();

/// Unsatisfied-clause buffer that keeps clauses in insertion order.
///
/// Removal only blanks the clause's slot, so live entries never move relative
/// to each other. Selection takes the second live entry and moves the first one
/// to the tail. Once the tail passes `max_tail` the live entries are compacted
/// back to the front.
class SlottedUnsatBuffer {
 public:
  SlottedUnsatBuffer() = default;
  SlottedUnsatBuffer(std::size_t num_clauses, std::size_t max_tail);

  void insert(ClauseId c);
  void remove(ClauseId c);

  /// Second live clause (the sole clause when only one is live). Requires
  /// size() > 0.
  ClauseId pick();

  /// Moves live clauses to slots [0, size()) in order; head = 0, tail = size().
  void defragment();

  bool contains(ClauseId c) const { return pos_[c] != kAbsent; }
  std::size_t size() const { return live_; }
  bool empty() const { return live_ == 0; }

  std::size_t head() const { return head_; }
  std::size_t tail() const { return tail_; }
  std::size_t max_tail() const { return max_tail_; }
  std::uint64_t defragmentations() const { return defragmentations_; }
  std::uint32_t position(ClauseId c) const { return pos_[c]; }

  /// Slots [0, tail); kEmptySlot marks a hole.
  std::span<const ClauseId> slots() const { return {slots_.data(), tail_}; }
  /// Live clauses from head to tail.
  std::vector<ClauseId> ordered_contents() const;
  std::string debug_string() const;

 private:
  void append(ClauseId c);
  void skip_leading_empty();

  std::vector<ClauseId> slots_;
  std::vector<std::uint32_t> pos_;
  std::size_t head_ = 0;
  std::size_t tail_ = 0;
  std::size_t live_ = 0;
  std::size_t max_tail_ = 0;
  std::uint64_t defragmentations_ = 0;
};

/// Dense unsatisfied-clause array with a position index. Removal swaps the
/// last element into the hole. Selection is either sequential (step mod size)
/// or uniformly random.
class DenseUnsatBuffer {
 public:
  DenseUnsatBuffer() = default;
  explicit DenseUnsatBuffer(std::size_t num_clauses) : pos_(num_clauses, kAbsent) {
    items_.reserve(num_clauses);
  }

  void insert(ClauseId c) {
    pos_[c] = static_cast<std::uint32_t>(items_.size());
    items_.push_back(c);
  }

  void remove(ClauseId c) {
    const std::uint32_t at = pos_[c];
    const ClauseId last = items_.back();
    items_[at] = last;
    pos_[last] = at;
    items_.pop_back();
    pos_[c] = kAbsent;
  }

  /// items[step mod size], then step advances. Requires size() > 0.
  ClauseId pick_sequential() { return items_[step_++ % items_.size()]; }

  /// items[u], u uniform over [0, size). Requires size() > 0.
  ClauseId pick_random(Rng& rng) { return items_[rng.below(items_.size())]; }

  bool contains(ClauseId c) const { return pos_[c] != kAbsent; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  std::uint64_t step() const { return step_; }
  std::uint32_t position(ClauseId c) const { return pos_[c]; }
  std::span<const ClauseId> items() const { return items_; }

 private:
  std::vector<ClauseId> items_;
  std::vector<std::uint32_t> pos_;
  std::uint64_t step_ = 0;
};

}  // namespace proms
