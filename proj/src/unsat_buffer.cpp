#include "proms/unsat_buffer.hpp"

#include <algorithm>
#include <sstream>

namespace proms {

SlottedUnsatBuffer::SlottedUnsatBuffer(std::size_t num_clauses, std::size_t max_tail)
    : pos_(num_clauses, kAbsent), max_tail_(std::max<std::size_t>(max_tail, 1)) {
  slots_.reserve(num_clauses);
}

void SlottedUnsatBuffer::append(ClauseId c) {
  if (tail_ == slots_.size()) {
    slots_.push_back(c);
  } else {
    slots_[tail_] = c;
  }
  pos_[c] = static_cast<std::uint32_t>(tail_);
  ++tail_;
}

void SlottedUnsatBuffer::insert(ClauseId c) {
  append(c);
  ++live_;
}

void SlottedUnsatBuffer::remove(ClauseId c) {
  slots_[pos_[c]] = kEmptySlot;
  pos_[c] = kAbsent;
  --live_;
}

void SlottedUnsatBuffer::skip_leading_empty() {
  while (head_ < tail_ && slots_[head_] == kEmptySlot) ++head_;
}

ClauseId SlottedUnsatBuffer::pick() {
  skip_leading_empty();
  const ClauseId first = slots_[head_];
  if (live_ == 1) return first;

  std::size_t second_at = head_ + 1;
  while (slots_[second_at] == kEmptySlot) ++second_at;
  const ClauseId chosen = slots_[second_at];

  slots_[head_] = kEmptySlot;
  append(first);
  head_ = second_at;

  if (tail_ > max_tail_) defragment();
  return chosen;
}

void SlottedUnsatBuffer::defragment() {
  std::size_t out = 0;
  for (std::size_t i = head_; i < tail_; ++i) {
    const ClauseId c = slots_[i];
    if (c == kEmptySlot) continue;
    slots_[out] = c;
    pos_[c] = static_cast<std::uint32_t>(out);
    ++out;
  }
  head_ = 0;
  tail_ = out;
  ++defragmentations_;
}

std::vector<ClauseId> SlottedUnsatBuffer::ordered_contents() const {
  std::vector<ClauseId> out;
  out.reserve(live_);
  for (std::size_t i = head_; i < tail_; ++i) {
    if (slots_[i] != kEmptySlot) out.push_back(slots_[i]);
  }
  return out;
}

std::string SlottedUnsatBuffer::debug_string() const {
  std::ostringstream out;
  out << "head=" << head_ << " tail=" << tail_ << " live=" << live_ << " [";
  for (std::size_t i = 0; i < tail_; ++i) {
    if (i) out << ' ';
    if (slots_[i] == kEmptySlot) {
      out << '_';
    } else {
      out << slots_[i];
    }
  }
  out << ']';
  return out.str();
}

}  // namespace proms
