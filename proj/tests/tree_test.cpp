#include "sinkloc/tree.hpp"

#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace sinkloc {
namespace {

using testing::all_of;
using testing::path;
using testing::set_of;
using testing::star3;

TEST(InstanceTest, BuildsPath) {
  Instance inst = path(3);
  EXPECT_EQ(inst.size(), 3u);
  EXPECT_EQ(inst.edges().size(), 2u);
  EXPECT_EQ(inst.degree(1), 2u);
  EXPECT_EQ(inst.total_weight(), 3u);
}

TEST(InstanceTest, RejectsCycle) {
  try {
    testing::make_instance(3, {{0, 1, 1, 1}, {1, 2, 1, 1}, {2, 0, 1, 1}}, {1, 1, 1});
    FAIL();
  } catch (const InstanceError& e) {
    EXPECT_EQ(e.kind(), InstanceError::Kind::NotATree);
  }
}

TEST(InstanceTest, RejectsDisconnectedAndWrongCount) {
  try {
    testing::make_instance(4, {{0, 1, 1, 1}, {0, 1, 1, 1}, {2, 3, 1, 1}}, {1, 1, 1, 1});
    FAIL();
  } catch (const InstanceError& e) {
    EXPECT_EQ(e.kind(), InstanceError::Kind::NotATree);
  }
  try {
    testing::make_instance(3, {{0, 1, 1, 1}}, {1, 1, 1});
    FAIL();
  } catch (const InstanceError& e) {
    EXPECT_EQ(e.kind(), InstanceError::Kind::NotATree);
  }
}

TEST(InstanceTest, RejectsZeroCapacityAndNegatives) {
  try {
    testing::make_instance(2, {{0, 1, 1, 0}}, {1, 1});
    FAIL();
  } catch (const InstanceError& e) {
    EXPECT_EQ(e.kind(), InstanceError::Kind::ZeroCapacity);
  }
  try {
    testing::make_instance(2, {{0, 1, -1, 1}}, {1, 1});
    FAIL();
  } catch (const InstanceError& e) {
    EXPECT_EQ(e.kind(), InstanceError::Kind::NegativeValue);
  }
  try {
    testing::make_instance(2, {{0, 1, 1, 1}}, {1, -3});
    FAIL();
  } catch (const InstanceError& e) {
    EXPECT_EQ(e.kind(), InstanceError::Kind::NegativeValue);
  }
}

TEST(DetachedSubtreeTest, Examples) {
  Instance p4 = path(4);
  EXPECT_EQ(detached_subtree(p4, all_of(p4), 2, 1), set_of(p4, {0, 1}));
  EXPECT_EQ(detached_subtree(p4, all_of(p4), 1, 2), set_of(p4, {2, 3}));
  Instance s = star3();
  EXPECT_EQ(detached_subtree(s, all_of(s), 0, 2), set_of(s, {2}));
}

TEST(DetachedSubtreeTest, NotAdjacent) {
  Instance p4 = path(4);
  try {
    detached_subtree(p4, all_of(p4), 0, 2);
    FAIL();
  } catch (const TreeError& e) {
    EXPECT_EQ(e.kind(), TreeError::Kind::NotAdjacent);
  }
}

TEST(DetachedSubtreeTest, SidesPartitionTheTree) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Instance inst = testing::random_tree(2 + trial, rng);
    VertexSet alive = all_of(inst);
    for (const Edge& e : inst.edges()) {
      VertexSet a = detached_subtree(inst, alive, e.v, e.u);
      VertexSet b = detached_subtree(inst, alive, e.u, e.v);
      EXPECT_EQ(a.size() + b.size(), inst.size());
      for (VertexId x : a.members()) EXPECT_FALSE(b.contains(x));
    }
  }
}

TEST(TreeMedianTest, Examples) {
  Instance p5 = path(5);
  EXPECT_EQ(tree_median(p5, all_of(p5)), 2);
  Instance p2 = path(2);
  EXPECT_EQ(tree_median(p2, all_of(p2)), 0);
  Instance s = star3();
  EXPECT_EQ(tree_median(s, all_of(s)), 0);
  EXPECT_THROW(tree_median(s, VertexSet(4)), TreeError);
}

TEST(TreeMedianTest, CentroidBound) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 64);
    Instance inst = testing::random_tree(n, rng);
    VertexSet alive = all_of(inst);
    VertexId m = tree_median(inst, alive);
    VertexSet rest = alive;
    rest.erase(m);
    const std::size_t bound = inst.size() / 2;  // ceil((n-1)/2)
    for (const Arc& a : inst.neighbors(m)) {
      EXPECT_LE(component_from(inst, rest, a.to).size(), bound);
    }
  }
}

TEST(HubStructureTest, Examples) {
  Instance p4 = path(4);
  HubStructure h = hub_structure(p4, all_of(p4), set_of(p4, {0, 3}));
  EXPECT_EQ(h.hub_tree_vertices, all_of(p4));
  EXPECT_TRUE(h.hubs.empty());

  Instance s = star3();
  HubStructure hs = hub_structure(s, all_of(s), set_of(s, {1, 2, 3}));
  EXPECT_EQ(hs.hub_tree_vertices, all_of(s));
  EXPECT_EQ(hs.hubs, set_of(s, {0}));

  HubStructure single = hub_structure(p4, all_of(p4), set_of(p4, {3}));
  EXPECT_EQ(single.hub_tree_vertices, set_of(p4, {3}));
  EXPECT_TRUE(single.hubs.empty());
}

TEST(HubStructureTest, SinkNotLeaf) {
  Instance p4 = path(4);
  try {
    hub_structure(p4, all_of(p4), set_of(p4, {1}));
    FAIL();
  } catch (const TreeError& e) {
    EXPECT_EQ(e.kind(), TreeError::Kind::SinkNotLeaf);
  }
}

TEST(BulkPathTest, Examples) {
  Instance p4 = path(4);
  HubStructure h = hub_structure(p4, all_of(p4), set_of(p4, {0, 3}));
  EXPECT_EQ(bulk_path(p4, all_of(p4), h, 1, 3), set_of(p4, {1, 2, 3}));

  Instance t = testing::make_instance(5, {{0, 1, 1, 1}, {0, 2, 1, 1}, {0, 3, 1, 1}, {1, 4, 1, 1}}, {0, 2, 2, 2, 1});
  HubStructure ht = hub_structure(t, all_of(t), set_of(t, {2, 3}));
  EXPECT_EQ(bulk_path(t, all_of(t), ht, 2, 3), all_of(t));
  EXPECT_EQ(bulk_path(t, all_of(t), ht, 0, 0), set_of(t, {0, 1, 4}));
  EXPECT_THROW(bulk_path(t, all_of(t), ht, 1, 2), TreeError);
}

TEST(CompartmentsTest, Examples) {
  Instance p5 = path(5);
  auto one = compartments(p5, all_of(p5), set_of(p5, {2}));
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(one[0].vertices, set_of(p5, {0, 1, 2}));
  EXPECT_EQ(one[1].vertices, set_of(p5, {2, 3, 4}));
  EXPECT_EQ(one[0].boundary, set_of(p5, {2}));
  EXPECT_EQ(one[1].boundary, set_of(p5, {2}));

  auto two = compartments(p5, all_of(p5), set_of(p5, {1, 3}));
  ASSERT_EQ(two.size(), 3u);
  EXPECT_EQ(two[0].vertices, set_of(p5, {0, 1}));
  EXPECT_EQ(two[1].vertices, set_of(p5, {1, 2, 3}));
  EXPECT_EQ(two[2].vertices, set_of(p5, {3, 4}));

  auto none = compartments(p5, all_of(p5), VertexSet(5));
  ASSERT_EQ(none.size(), 1u);
  EXPECT_EQ(none[0].vertices, all_of(p5));
  EXPECT_TRUE(none[0].boundary.empty());
}

TEST(CompartmentsTest, CoverAndSharedVertices) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Instance inst = testing::random_tree(1 + trial % 20, rng);
    VertexSet W(inst.size());
    for (std::size_t v = 0; v < inst.size(); ++v) {
      if (rng() % 3 == 0) W.insert(static_cast<VertexId>(v));
    }
    auto parts = compartments(inst, all_of(inst), W);
    std::vector<int> hits(inst.size(), 0);
    for (const auto& c : parts) {
      for (VertexId x : c.vertices.members()) ++hits[x];
    }
    for (std::size_t v = 0; v < inst.size(); ++v) {
      const auto x = static_cast<VertexId>(v);
      EXPECT_GE(hits[v], 1);
      if (hits[v] >= 2) EXPECT_TRUE(W.contains(x));
      if (W.contains(x) && inst.degree(x) >= 2) EXPECT_EQ(hits[v], static_cast<int>(inst.degree(x)));
    }
  }
}

}  // namespace
}  // namespace sinkloc
