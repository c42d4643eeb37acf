#include <gtest/gtest.h>

#include <algorithm>

#include "instances.hpp"
#include "mcf/error.hpp"
#include "mcf/tiling.hpp"

namespace mcf {
namespace {

using testing::InstanceGenerator;
using V = std::vector<Integer>;

constexpr auto S = TileKind::square;
constexpr auto D = TileKind::domino;

// The worked mixed example: a = (2,3,1,2,2,3), b = (-,-1,3,3,2,-1),
// c = (-,-,-2,2,1,-1).
HeightConditions worked_example() {
  return HeightConditions(V{2, 3, 1, 2, 2, 3}, V{0, -1, 3, 3, 2, -1}, V{0, 0, -2, 2, 1, -1});
}

TEST(MixedConditions, SideConditions) {
  EXPECT_FALSE(check_mixed_conditions(V{1, 3}, V{0, -2}, V{0, 0}));
  EXPECT_TRUE(check_mixed_conditions(V{1, 2}, V{0, -2}, V{0, 0}));
  // b > 0, c < 0: a > |c| or b > |c|
  EXPECT_FALSE(check_mixed_conditions(V{1, 1, 1}, V{0, 0, 3}, V{0, 0, -2}));
  EXPECT_FALSE(check_mixed_conditions(V{1, 1, 3}, V{0, 0, 1}, V{0, 0, -2}));
  EXPECT_TRUE(check_mixed_conditions(V{1, 1, 2}, V{0, 0, 2}, V{0, 0, -2}));
  // both negative: a > |b| + |c|
  EXPECT_FALSE(check_mixed_conditions(V{1, 1, 4}, V{0, 0, -1}, V{0, 0, -2}));
  EXPECT_TRUE(check_mixed_conditions(V{1, 1, 3}, V{0, 0, -1}, V{0, 0, -2}));
  // placeholders b_0, c_0, c_1 are not constrained
  EXPECT_FALSE(check_mixed_conditions(V{1, 1}, V{-9, 0}, V{-9, -9}));
  EXPECT_NO_THROW(worked_example());
}

TEST(CountMixed, SmallBoards) {
  EXPECT_EQ(count_mixed(HeightConditions(V{3, 4}, V{0, -2}, V{0, 0})), 10);
  EXPECT_EQ(enumerate_mixed(HeightConditions(V{3, 4}, V{0, -2}, V{0, 0})).size(), 10u);
  EXPECT_EQ(count_mixed(HeightConditions(V{2, 2, 3}, V{0, 1, -1}, V{0, 0, 1})), 14);
  EXPECT_EQ(enumerate_mixed(HeightConditions(V{2, 2, 3}, V{0, 1, -1}, V{0, 0, 1})).size(), 14u);
}

TEST(CountMixed, WorkedExampleMatchesEnumerator) {
  const auto h = worked_example();
  EXPECT_EQ(Integer(enumerate_mixed(h).size()), count_mixed(h));
}

TEST(EnumerateMixed, WorkedExampleExclusions) {
  const auto h = worked_example();
  const auto ts = enumerate_mixed(h);
  const auto contains = [&](const Tiling& t) { return std::find(ts.begin(), ts.end(), t) != ts.end(); };

  // Full stack at 0 then a single square at 1: removed by the negative b_1.
  const Tiling single_square_after_full{{{S, 0, 2}, {S, 1, 1}, {S, 2, 1}, {D, 3, 2}, {S, 5, 1}}};
  ASSERT_TRUE(fits_plain(HeightConditions(V{2, 3, 1, 2, 2, 3}, V{0, 0, 3, 3, 2, 0}, V{0, 0, 0, 2, 1, 0}),
                         single_square_after_full));
  EXPECT_FALSE(contains(single_square_after_full));
  EXPECT_EQ(find_mixed_violation(h, single_square_after_full)->rule, MixedRule::negative_domino);
  EXPECT_EQ(find_mixed_violation(h, single_square_after_full)->position, 1u);

  // Full stack at 0 then one domino over 1, 2: removed by the negative c_2
  // (a_2 = 1 is too small, so the dominoes are restricted).
  const Tiling domino_after_full{{{S, 0, 2}, {D, 1, 1}, {D, 3, 2}, {S, 5, 1}}};
  EXPECT_FALSE(contains(domino_after_full));
  EXPECT_EQ(find_mixed_violation(h, domino_after_full)->rule, MixedRule::negative_bar_on_dominoes);

  // Full stacks at 3 and 4, two squares at 5: |b_5| + |c_5| = 2.
  const Tiling pair_rule{{{S, 0, 2}, {D, 1, 3}, {S, 3, 2}, {S, 4, 2}, {S, 5, 2}}};
  EXPECT_FALSE(contains(pair_rule));
  EXPECT_EQ(find_mixed_violation(h, pair_rule)->rule, MixedRule::negative_both_pair);

  // Cell 3 not full, full stack at 4, one square at 5: |b_5| = 1.
  const Tiling single_rule{{{S, 0, 2}, {D, 1, 3}, {S, 3, 1}, {S, 4, 2}, {S, 5, 1}}};
  EXPECT_FALSE(contains(single_rule));
  EXPECT_EQ(find_mixed_violation(h, single_rule)->rule, MixedRule::negative_both_single);

  // Same but three squares at 5 stays admissible.
  const Tiling kept{{{S, 0, 2}, {D, 1, 3}, {S, 3, 1}, {S, 4, 2}, {S, 5, 3}}};
  EXPECT_TRUE(contains(kept));
  EXPECT_FALSE(find_mixed_violation(h, kept));
}

TEST(EnumerateMixed, NegativeBarOnSquares) {
  // b_2 = 1 > 0, c_2 = -1, a_2 = 2 > 1: full stacks at 0 and 1 forbid one
  // square at 2.
  const HeightConditions h(V{2, 2, 2}, V{0, 1, 1}, V{0, 0, -1});
  const Tiling t{{{S, 0, 2}, {S, 1, 2}, {S, 2, 1}}};
  EXPECT_EQ(find_mixed_violation(h, t)->rule, MixedRule::negative_bar_on_squares);
  EXPECT_EQ(Integer(enumerate_mixed(h).size()), count_mixed(h));
  // a = 2*2*2 + 2*1 + 2*1 - 1 = 11
  EXPECT_EQ(count_mixed(h), 11);
}

TEST(EnumerateMixed, NonNegativeBoundsFallBackToPlain) {
  InstanceGenerator gen(30);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = gen.plain(static_cast<std::size_t>(gen.uniform(0, 5)), 3);
    EXPECT_EQ(enumerate_mixed(h), enumerate_plain(h));
    EXPECT_EQ(count_mixed(h), count_fast(h));
  }
}

TEST(EnumerateMixed, MatchesSignedRecurrence) {
  InstanceGenerator gen(31);
  for (int trial = 0; trial < 400; ++trial) {
    const auto h = gen.mixed(static_cast<std::size_t>(gen.uniform(0, 6)), 3);
    const auto ts = enumerate_mixed(h);
    ASSERT_EQ(Integer(ts.size()), count_mixed(h)) << "trial " << trial;
    auto sorted = ts;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
  }
}

TEST(EnumerateMixed, LargerEntries) {
  InstanceGenerator gen(32);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = gen.mixed(static_cast<std::size_t>(gen.uniform(2, 5)), 5);
    EXPECT_EQ(Integer(enumerate_mixed(h).size()), count_mixed(h)) << "trial " << trial;
  }
}

}  // namespace
}  // namespace mcf
