#include <gtest/gtest.h>

#include <random>

#include "gbp/bounds.hpp"
#include "gbp/subproblem.hpp"
#include "instances.hpp"

namespace gbp {
namespace {

TEST(Bitmap, SetResetCount) {
  Bitmap b(130);
  b.set(0);
  b.set(64);
  b.set(129);
  EXPECT_TRUE(b.test(64));
  EXPECT_EQ(b.count(), 3u);
  b.reset(64);
  EXPECT_FALSE(b.test(64));
  EXPECT_EQ(b.count(), 2u);
}

TEST(SeenTarget, Definition) {
  EXPECT_EQ(seen_target(0, 3), 0u);
  EXPECT_EQ(seen_target(2, 3), 0u);
  EXPECT_EQ(seen_target(3, 3), 1u);
  EXPECT_EQ(seen_target(7, 3), 5u);
  EXPECT_EQ(seen_target(4, 0), 4u);
}

TEST(Subproblem, RootOfK4FixesVertexZero) {
  const auto g = generate_er({4, 1.0, 1, 1, 0});
  const auto sp = Subproblem::root(g, 2, 2);
  EXPECT_TRUE(sp.in_side(0, kSide0));
  EXPECT_EQ(sp.free_count(), 3u);
  EXPECT_EQ(sp.remaining(kSide0), 1u);
  EXPECT_EQ(sp.remaining(kSide1), 2u);
  for (Vertex v : {1u, 2u, 3u}) {
    EXPECT_EQ(sp.weight_to(kSide0, v), 1);
    EXPECT_EQ(sp.weight_to(kSide1, v), 0);
    EXPECT_EQ(sp.free_degree(v), 2u);
  }
}

TEST(Subproblem, UnequalSizesLeaveRootEmpty) {
  const Edge edges[] = {{0, 1, 1}, {1, 2, 1}};
  const auto g = WeightedGraph::from_edges(3, edges);
  const auto sp = Subproblem::root(g, 2, 1);
  EXPECT_EQ(sp.free_count(), 3u);
  EXPECT_EQ(sp.fixed_cut(), 0);
  EXPECT_EQ(sp.depth(), 0u);
}

TEST(Subproblem, InvalidInputs) {
  const auto g = generate_er({4, 1.0, 1, 1, 0});
  EXPECT_THROW(Subproblem::root(g, 0, 4), SubproblemError);
  EXPECT_THROW(Subproblem::root(g, 2, 1), SubproblemError);
  const std::vector<std::int8_t> over{0, 0, 0, -1};
  EXPECT_THROW(Subproblem::from_assignment(g, over, 2, 2), SubproblemError);
  const auto sp = Subproblem::root(g, 2, 2);
  EXPECT_THROW(sp.assign(0, kSide1), SubproblemError);
  const auto full = sp.assign(1, kSide0);
  EXPECT_THROW(full.assign(2, kSide0), SubproblemError);
}

TEST(Subproblem, AssignUpdatesState) {
  const Edge edges[] = {{0, 1, 3}, {1, 2, 5}, {0, 2, 2}};
  const auto g = WeightedGraph::from_edges(3, edges);
  const auto root = Subproblem::root(g, 2, 1);
  const auto a = root.assign(0, kSide0).assign(2, kSide1);
  EXPECT_EQ(a.fixed_cut(), 2);
  EXPECT_EQ(a.weight_to(kSide0, 1), 3);
  EXPECT_EQ(a.weight_to(kSide1, 1), 5);
  EXPECT_EQ(a.delta(1), 2);
  EXPECT_EQ(a.free_weight(1), 0);
  EXPECT_EQ(a.zero_free_degree_count(), 1u);
  EXPECT_EQ(root.free_count(), 3u);
  EXPECT_FALSE(a.check_consistency().has_value());
}

TEST(Subproblem, MatchesRecomputationAlongRandomTrajectories) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const auto inst = testing::random_instance(rng, 2, 24);
    Subproblem sp = Subproblem::root(inst.graph, inst.s0, inst.s1);
    while (sp.free_count() > 0) {
      const auto fresh = Subproblem::from_assignment(inst.graph, sp.sides(), inst.s0, inst.s1);
      const auto diff = first_difference(sp, fresh);
      ASSERT_FALSE(diff.has_value()) << inst.label << ": " << *diff;
      const auto bad = sp.check_consistency();
      ASSERT_FALSE(bad.has_value()) << inst.label << ": " << *bad;
      if (rng() % 2 == 0) lower_bound(sp, BoundConfig::full());
      const auto free = sp.free_vertices();
      Side side = rng() % 2 ? kSide0 : kSide1;
      if (sp.remaining(side) == 0) side = other(side);
      sp = sp.assign(free[rng() % free.size()], side);
    }
  }
}

TEST(Subproblem, SeenCountersOnStar) {
  // Center 0 with leaves 1-5 of weights 1..5, sizes 3 + 3.
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= 5; ++v) edges.push_back({0, v, static_cast<Weight>(v)});
  const auto g = WeightedGraph::from_edges(6, edges);
  const auto sp = Subproblem::from_assignment(g, std::vector<std::int8_t>(6, -1), 3, 3);
  // deg' = 5, f = 3: the three lightest edges are seen on both sides.
  EXPECT_EQ(sp.seen(kSide0, 0).seen_count, 3u);
  EXPECT_EQ(sp.seen(kSide0, 0).seen_weight, 6);
  EXPECT_EQ(sp.seen(kSide0, 0).scan_index, 3u);
  const auto child = sp.assign(2, kSide1);
  // Removing a seen entry pulls the next lightest one in on side 0; on side 1
  // f drops to 2 and one more edge becomes seen as well.
  EXPECT_EQ(child.seen(kSide0, 0).seen_count, 2u);
  EXPECT_EQ(child.seen(kSide0, 0).seen_weight, 1 + 3);
  EXPECT_EQ(child.seen(kSide1, 0).seen_count, 3u);
  EXPECT_EQ(child.seen(kSide1, 0).seen_weight, 1 + 3 + 4);
  EXPECT_FALSE(first_difference(child, Subproblem::from_assignment(g, child.sides(), 3, 3)).has_value());
}

TEST(Subproblem, ScanWorkIsLinearInAdjacency) {
  const auto g = generate_er({60, 0.5, 1, 1000, 4});
  std::size_t entries = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) entries += g.degree(v);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto leaf = testing::random_descendant(g, 30, 30, rng, 60);
    EXPECT_LE(leaf.scan_steps(), 4 * entries);
  }
}

TEST(Subproblem, EstimatesOnlyDecrease) {
  const auto g = generate_er({20, 0.3, 1, 1, 8});
  auto sp = Subproblem::root(g, 10, 10);
  sp.refresh_max_free_degree(2);
  EXPECT_LE(sp.approx_max_free_degree(), 2u);
  sp.refresh_max_free_degree(50);
  EXPECT_LE(sp.approx_max_free_degree(), 2u);
}

TEST(Subproblem, WithoutHighDegreeTracking) {
  const auto g = generate_er({12, 0.5, 1, 10, 2});
  std::mt19937_64 rng(6);
  const auto sp = testing::random_descendant(g, 6, 6, rng, 5, false);
  EXPECT_FALSE(sp.tracks_high_degree());
  const auto fresh = Subproblem::from_assignment(g, sp.sides(), 6, 6, false);
  EXPECT_FALSE(first_difference(sp, fresh).has_value());
}

}  // namespace
}  // namespace gbp
