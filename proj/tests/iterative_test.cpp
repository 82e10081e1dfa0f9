#include <gtest/gtest.h>

#include <random>

#include "invariant_hooks.hpp"
#include "sinkloc/brute_force.hpp"
#include "sinkloc/feasibility.hpp"
#include "support.hpp"

namespace sinkloc {
namespace {

using testing::all_of;
using testing::path;
using testing::set_of;
using testing::star3;

FeasibilityResult solve(const Instance& inst, Cost limit, const CostFunction& fn = EvacuationTime()) {
  Oracle oracle(inst, fn);
  return bounded_cost_iterative(inst, oracle, limit);
}

TEST(CommitTest, MergeAndErrors) {
  Instance p4 = path(4);
  Configuration config(4);
  config.add_sink(0);
  config.commit(set_of(p4, {0, 1}));
  config.commit(set_of(p4, {0, 2}));
  auto blocks = config.blocks();
  ASSERT_EQ(blocks.size(), 1u);
  EXPECT_EQ(blocks[0].vertices, set_of(p4, {0, 1, 2}));
  try {
    config.commit(set_of(p4, {3}));
    FAIL();
  } catch (const CommitError& e) {
    EXPECT_EQ(e.kind(), CommitError::Kind::NoSinkInBlock);
  }
  config.add_sink(3);
  EXPECT_THROW(config.commit(set_of(p4, {0, 1, 2, 3})), CommitError);
}

TEST(PcCheckTest, Examples) {
  EvacuationTime f;
  Instance p3 = path(3, 3);
  {
    Oracle oracle(p3, f);
    FixedThreshold t(0);
    WorkingState st(p3, oracle, t);
    st.push_pc(0, 1);
    EXPECT_EQ(pc_check(st, 0, 1), PcResult::SinkPlaced);
    EXPECT_TRUE(st.is_sink(0));
    EXPECT_EQ(st.status(0), Status::RcQueued);
  }
  {
    Oracle oracle(p3, f);
    FixedThreshold t(2);
    WorkingState st(p3, oracle, t);
    st.push_pc(0, 1);
    st.push_pc(2, 1);
    EXPECT_EQ(pc_check(st, 0, 1), PcResult::Marked);
    EXPECT_EQ(st.status(0), Status::PcMarked);
  }
  {
    Instance s = star3();
    Oracle oracle(s, f);
    FixedThreshold t(2);
    WorkingState st(s, oracle, t);
    st.push_pc(1, 0);
    EXPECT_EQ(pc_check(st, 1, 0), PcResult::Marked);
    EXPECT_EQ(st.status(1), Status::PcMarked);
  }
}

TEST(RcCheckTest, Examples) {
  EvacuationTime f;
  Instance p4 = path(4, 2);
  auto setup = [&](WorkingState& st) {
    st.place_sink(0);
    st.configuration().commit(set_of(p4, {0}));
    st.set_status(0, Status::RcMarked, 1);
    st.set_status(1, Status::RcMarked, 2);
    st.set_witness(1, 0);
    st.set_witness(2, 0);
    st.set_status(2, Status::RcQueued, 3);
  };
  {
    Oracle oracle(p4, f);
    FixedThreshold t(2);
    WorkingState st(p4, oracle, t);
    setup(st);
    EXPECT_EQ(rc_check(st, 2, 3), RcResult::SubtreeRemoved);
    // The remainder {3} is sink-free and gets its own sink.
    auto blocks = st.configuration().blocks();
    ASSERT_EQ(blocks.size(), 2u);
    EXPECT_EQ(blocks[0].vertices, set_of(p4, {0, 1, 2}));
    EXPECT_EQ(blocks[1].vertices, set_of(p4, {3}));
  }
  {
    Oracle oracle(p4, f);
    FixedThreshold t(3);
    WorkingState st(p4, oracle, t);
    setup(st);
    EXPECT_EQ(rc_check(st, 2, 3), RcResult::Marked);
    EXPECT_EQ(st.witness(3), 0);
  }
}

TEST(PartitionFromWitnessesTest, Examples) {
  EvacuationTime f;
  FixedThreshold t(1);
  {
    Instance p4 = path(4, 2);
    Oracle oracle(p4, f);
    WorkingState st(p4, oracle, t);
    st.place_sink(0);
    st.place_sink(3);
    st.set_witness(1, 0);
    st.set_witness(2, 3);
    auto blocks = partition_from_witnesses(st, 1, all_of(p4));
    ASSERT_EQ(blocks.size(), 2u);
    EXPECT_EQ(blocks[0].vertices, set_of(p4, {0, 1}));
    EXPECT_EQ(blocks[0].sink, 0);
    EXPECT_EQ(blocks[1].vertices, set_of(p4, {2, 3}));
    EXPECT_EQ(blocks[1].sink, 3);
  }
  {
    Instance s = star3(3);
    Oracle oracle(s, f);
    WorkingState st(s, oracle, t);
    for (VertexId x : {1, 2, 3}) st.place_sink(x);
    st.set_witness(0, 1);
    auto blocks = partition_from_witnesses(st, 0, all_of(s));
    ASSERT_EQ(blocks.size(), 3u);
    EXPECT_EQ(blocks[0].vertices, set_of(s, {0, 1}));
    EXPECT_EQ(blocks[1].vertices, set_of(s, {2}));
    EXPECT_EQ(blocks[2].vertices, set_of(s, {3}));
    WorkingState missing(s, oracle, t);
    missing.place_sink(1);
    try {
      partition_from_witnesses(missing, 0, all_of(s));
      FAIL();
    } catch (const FeasibilityError& e) {
      EXPECT_EQ(e.kind(), FeasibilityError::Kind::MissingWitness);
    }
  }
  {
    Instance p1 = path(1);
    Oracle oracle(p1, f);
    WorkingState st(p1, oracle, t);
    st.place_sink(0);
    auto blocks = partition_from_witnesses(st, 0, all_of(p1));
    ASSERT_EQ(blocks.size(), 1u);
  }
}

TEST(IterativeTest, Examples) {
  FeasibilityResult a = solve(path(3, 1), 1);
  ASSERT_TRUE(a.feasible());
  EXPECT_EQ(a.configuration->sinks(), (std::vector<VertexId>{1}));
  EXPECT_EQ(a.configuration->block_count(), 1u);

  EXPECT_FALSE(solve(path(3, 1), 0).feasible());

  FeasibilityResult c = solve(path(3, 3), 0);
  ASSERT_TRUE(c.feasible());
  EXPECT_EQ(c.configuration->sinks(), (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(c.configuration->block_count(), 3u);

  EXPECT_TRUE(solve(path(1), 0).feasible());
}

TEST(IterativeTest, MatchesBruteForce) {
  std::mt19937_64 rng(17);
  for (const CostFunction* fn : std::initializer_list<const CostFunction*>{new EvacuationTime, new Eccentricity}) {
    for (int trial = 0; trial < 120; ++trial) {
      const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 9);
      const std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 3);
      Instance inst = testing::random_tree(n, rng, k);
      const Cost best = brute_force_optimal(inst, *fn, inst.k()).cost;
      const Cost top = fn->evaluate(inst, all_of(inst), 0);
      for (Cost limit = 0; limit <= top; ++limit) {
        testing::InvariantHooks hooks(*fn, limit);
        Oracle oracle(inst, *fn);
        FeasibilityResult r = bounded_cost_iterative(inst, oracle, limit, &hooks);
        ASSERT_EQ(r.feasible(), limit >= best) << "trial " << trial << " limit " << limit;
        EXPECT_LE(oracle.stats().calls, 4 * inst.size()) << "trial " << trial;
        ASSERT_TRUE(hooks.failures.empty()) << hooks.failures.front() << " trial " << trial << " limit " << limit;
        if (r.feasible()) {
          EXPECT_EQ(r.configuration->validate(inst), "");
          EXPECT_LE(r.configuration->cost(inst, *fn), limit);
        }
      }
    }
    delete fn;
  }
}

}  // namespace
}  // namespace sinkloc
