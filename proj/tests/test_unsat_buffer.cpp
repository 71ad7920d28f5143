#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "proms/unsat_buffer.hpp"

namespace proms {
namespace {

using testing::FifoModel;

TEST(SlottedBufferTest, PickReturnsSecondAndRotatesFirst) {
  SlottedUnsatBuffer b(10, 100);
  for (ClauseId c : {3u, 7u, 9u}) b.insert(c);
  EXPECT_EQ(b.pick(), 7u);
  const std::vector<ClauseId> slots(b.slots().begin(), b.slots().end());
  EXPECT_EQ(slots, (std::vector<ClauseId>{kEmptySlot, 7, 9, 3}));
  EXPECT_EQ(b.tail(), 4u);
  EXPECT_EQ(b.position(3), 3u);
}

TEST(SlottedBufferTest, SoleClauseIsNotRotated) {
  SlottedUnsatBuffer b(10, 100);
  b.insert(5);
  EXPECT_EQ(b.pick(), 5u);
  EXPECT_EQ(b.pick(), 5u);
  EXPECT_EQ(b.tail(), 1u);
}

TEST(SlottedBufferTest, DefragmentCompactsInOrder) {
  SlottedUnsatBuffer b(10, 100);
  for (ClauseId c : {1u, 7u, 4u, 2u}) b.insert(c);
  b.remove(1);
  b.remove(4);
  b.defragment();
  const std::vector<ClauseId> slots(b.slots().begin(), b.slots().end());
  EXPECT_EQ(slots, (std::vector<ClauseId>{7, 2}));
  EXPECT_EQ(b.head(), 0u);
  EXPECT_EQ(b.tail(), 2u);

  b.defragment();
  EXPECT_EQ(b.ordered_contents(), (std::vector<ClauseId>{7, 2}));
}

TEST(SlottedBufferTest, StaticBufferVisitsInFifoOrder) {
  SlottedUnsatBuffer b(5, 1000);
  FifoModel model;
  for (ClauseId c = 0; c < 5; ++c) {
    b.insert(c);
    model.insert(c);
  }
  // Rotating [0..4]: picks 1,2,3,4,0,1,... each clause once per cycle of 5.
  for (int i = 0; i < 50; ++i) {
    const ClauseId expect = static_cast<ClauseId>((i + 1) % 5);
    EXPECT_EQ(model.pick(), expect);
    EXPECT_EQ(b.pick(), expect);
  }
}

TEST(SlottedBufferTest, OverflowTriggersDefragmentation) {
  SlottedUnsatBuffer b(4, 8);
  for (ClauseId c = 0; c < 4; ++c) b.insert(c);
  for (int i = 0; i < 5; ++i) b.pick();
  EXPECT_EQ(b.defragmentations(), 1u);
  EXPECT_LE(b.tail(), b.max_tail());
}

TEST(SlottedBufferTest, DebugStringMarksEmptySlots) {
  SlottedUnsatBuffer b(10, 100);
  for (ClauseId c : {3u, 7u, 9u}) b.insert(c);
  b.pick();
  EXPECT_EQ(b.debug_string(), "head=1 tail=4 live=3 [_ 7 9 3]");
}

// Randomized churn checked against a deque model after every operation.
TEST(SlottedBufferTest, ChurnMatchesModel) {
  constexpr std::size_t kClauses = 40;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Rng rng(seed);
    SlottedUnsatBuffer b(kClauses, 3 * kClauses);
    FifoModel model;
    for (int op = 0; op < 20000; ++op) {
      const auto kind = rng.below(10);
      const auto c = static_cast<ClauseId>(rng.below(kClauses));
      if (kind < 3) {
        if (!model.contains(c)) {
          b.insert(c);
          model.insert(c);
        }
      } else if (kind < 5) {
        if (model.contains(c)) {
          b.remove(c);
          model.remove(c);
        }
      } else if (kind < 9) {
        if (model.size() > 0) {
          ASSERT_EQ(b.pick(), model.pick());
        }
      } else {
        b.defragment();
      }
      const std::string err = testing::check_slotted(b, kClauses, model);
      ASSERT_TRUE(err.empty()) << "seed " << seed << " op " << op << ": " << err << b.debug_string();
    }
  }
}

TEST(DenseBufferTest, SequentialPickWrapsAround) {
  DenseUnsatBuffer b(10);
  for (ClauseId c : {1u, 2u, 3u}) b.insert(c);
  EXPECT_EQ(b.pick_sequential(), 1u);
  EXPECT_EQ(b.pick_sequential(), 2u);
  EXPECT_EQ(b.pick_sequential(), 3u);
  EXPECT_EQ(b.pick_sequential(), 1u);
  EXPECT_EQ(b.step(), 4u);
}

TEST(DenseBufferTest, SingleClause) {
  DenseUnsatBuffer b(3);
  b.insert(2);
  Rng rng(1);
  for (int i = 0; i < 10; ++i) {
    EXPECT_EQ(b.pick_sequential(), 2u);
    EXPECT_EQ(b.pick_random(rng), 2u);
  }
}

TEST(DenseBufferTest, RemoveSwapsWithLast) {
  DenseUnsatBuffer b(10);
  for (ClauseId c : {4u, 5u, 6u, 7u}) b.insert(c);
  b.remove(5);
  const std::vector<ClauseId> items(b.items().begin(), b.items().end());
  EXPECT_EQ(items, (std::vector<ClauseId>{4, 7, 6}));
  EXPECT_EQ(b.position(7), 1u);
  EXPECT_EQ(b.position(5), kAbsent);
}

TEST(DenseBufferTest, RandomPickIsUniform) {
  DenseUnsatBuffer b(4);
  for (ClauseId c = 0; c < 4; ++c) b.insert(c);
  Rng rng(2024);
  std::vector<std::uint64_t> counts(4, 0);
  constexpr int kDraws = 100000;
  for (int i = 0; i < kDraws; ++i) ++counts[b.pick_random(rng)];
  for (auto count : counts) EXPECT_NEAR(static_cast<double>(count) / kDraws, 0.25, 0.01);
}

TEST(DenseBufferTest, ChurnMatchesModel) {
  constexpr std::size_t kClauses = 40;
  Rng rng(77);
  DenseUnsatBuffer b(kClauses);
  std::set<ClauseId> model;
  for (int op = 0; op < 20000; ++op) {
    const auto kind = rng.below(8);
    const auto c = static_cast<ClauseId>(rng.below(kClauses));
    if (kind < 3) {
      if (!model.count(c)) {
        b.insert(c);
        model.insert(c);
      }
    } else if (kind < 5) {
      if (model.count(c)) {
        b.remove(c);
        model.erase(c);
      }
    } else if (!model.empty()) {
      const ClauseId picked = kind == 5 ? b.pick_sequential() : b.pick_random(rng);
      ASSERT_TRUE(model.count(picked));
    }
    const std::string err = testing::check_dense(b, kClauses, model);
    ASSERT_TRUE(err.empty()) << "op " << op << ": " << err;
  }
}

}  // namespace
}  // namespace proms
