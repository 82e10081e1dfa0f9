#include "sinkloc/brute_force.hpp"

#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace sinkloc {
namespace {

using testing::all_of;
using testing::path;
using testing::set_of;

TEST(BruteForceTest, FExamples) {
  EvacuationTime f;
  Instance p3 = path(3);
  EXPECT_EQ(brute_force_F(p3, f, set_of(p3, {1})), 1u);
  EXPECT_EQ(brute_force_F(p3, f, set_of(p3, {0, 2})), 1u);
  EXPECT_EQ(brute_force_F(p3, f, all_of(p3)), 0u);
  Instance p4 = path(4);
  EXPECT_EQ(brute_force_F(p4, f, set_of(p4, {0, 3})), 1u);
  EXPECT_EQ(brute_force_F(p4, f, set_of(p4, {0})), 3u);
}

TEST(BruteForceTest, PartitionBlocks) {
  EvacuationTime f;
  Instance p4 = path(4);
  BruteForceValue v = brute_force_partition(p4, f, set_of(p4, {0, 3}));
  ASSERT_EQ(v.blocks.size(), 2u);
  EXPECT_EQ(v.blocks[0].vertices, set_of(p4, {0, 1}));
  EXPECT_EQ(v.blocks[1].vertices, set_of(p4, {2, 3}));
}

TEST(BruteForceTest, OptimalExamples) {
  EvacuationTime f;
  BruteForceOptimum a = brute_force_optimal(path(3), f, 1);
  EXPECT_EQ(a.cost, 1u);
  EXPECT_EQ(a.sinks, (std::vector<VertexId>{1}));

  // {0,2} reaches cost 1 and precedes {1,3}.
  BruteForceOptimum b = brute_force_optimal(path(4), f, 2);
  EXPECT_EQ(b.cost, 1u);
  EXPECT_EQ(b.sinks, (std::vector<VertexId>{0, 2}));
  EXPECT_EQ(brute_force_F(path(4), f, set_of(path(4), {1, 3})), 1u);

  BruteForceOptimum c = brute_force_optimal(path(3), f, 3);
  EXPECT_EQ(c.cost, 0u);
  EXPECT_EQ(c.sinks, (std::vector<VertexId>{0, 1, 2}));

  EXPECT_EQ(brute_force_optimal(path(4), f, 1).cost, 2u);
  EXPECT_EQ(brute_force_optimal(path(6), Eccentricity(), 1).cost, 3u);
}

TEST(BruteForceTest, TooLarge) {
  EXPECT_THROW(brute_force_optimal(path(17), EvacuationTime(), 1), TooLarge);
}

TEST(BruteForceTest, NonIncreasingInK) {
  std::mt19937_64 rng(8);
  EvacuationTime f;
  for (int trial = 0; trial < 20; ++trial) {
    Instance inst = testing::random_tree(2 + trial % 7, rng);
    Cost prev = kInfiniteCost;
    for (std::size_t k = 1; k <= inst.size(); ++k) {
      Cost c = brute_force_optimal(inst, f, k).cost;
      EXPECT_LE(c, prev);
      prev = c;
    }
    EXPECT_EQ(prev, 0u);
  }
}

}  // namespace
}  // namespace sinkloc
