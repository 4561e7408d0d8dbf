#include <gtest/gtest.h>

#include <random>

#include "gbp/oracle.hpp"
#include "instances.hpp"

namespace gbp {
namespace {

TEST(Oracle, FourVertexExample) {
  const Edge edges[] = {{0, 1, 3}, {1, 2, 5}, {0, 2, 2}, {2, 3, 4}};
  const auto g = WeightedGraph::from_edges(4, edges);
  const auto r = oracle::brute_force_optimum(g, 2, 2);
  EXPECT_EQ(r.optimum, 7);
  EXPECT_EQ(r.enumerated, 3u);
  EXPECT_EQ(r.witness.value, 7);
  EXPECT_EQ(r.witness.assignment[0], kSide0);
}

TEST(Oracle, CompleteGraph) {
  const auto g = generate_er({8, 1.0, 1, 1, 0});
  EXPECT_EQ(oracle::brute_force_optimum(g, 4, 4).optimum, 16);
  EXPECT_EQ(oracle::brute_force_optimum(g, 3, 5).optimum, 15);
  EXPECT_EQ(oracle::brute_force_optimum(g, 3, 5).enumerated, 56u);
}

TEST(Oracle, TermsOfTriangleSubproblem) {
  const Edge edges[] = {{0, 1, 3}, {1, 2, 5}, {0, 2, 2}};
  const auto g = WeightedGraph::from_edges(3, edges);
  const std::vector<std::int8_t> sides{0, -1, 1};
  EXPECT_EQ(oracle::brute_force_fixed_free_min(g, sides, 2, 1), 5);
  EXPECT_EQ(oracle::brute_force_free_free_min(g, sides, 2, 1), 0);
  EXPECT_EQ(oracle::brute_force_completion_min(g, sides, 2, 1), 7);
}

TEST(Oracle, TermsAreIndependentMinima) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const auto inst = testing::random_instance(rng, 2, 10);
    const auto sides = testing::random_sides(rng, inst.graph.vertex_count(), inst.s0, inst.s1);
    const auto sp = Subproblem::from_assignment(inst.graph, sides, inst.s0, inst.s1);
    EXPECT_GE(oracle::brute_force_completion_min(sp),
              sp.fixed_cut() + oracle::brute_force_fixed_free_min(sp) + oracle::brute_force_free_free_min(sp));
  }
}

TEST(Oracle, RootCompletionMatchesOptimum) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const auto inst = testing::random_instance(rng, 2, 12);
    const std::vector<std::int8_t> none(inst.graph.vertex_count(), -1);
    EXPECT_EQ(oracle::brute_force_completion_min(inst.graph, none, inst.s0, inst.s1),
              oracle::brute_force_optimum(inst.graph, inst.s0, inst.s1).optimum);
  }
}

TEST(Oracle, Limits) {
  const auto big = generate_er({25, 0.1, 1, 1, 0});
  EXPECT_THROW(oracle::brute_force_optimum(big, 12, 13), oracle::TooLarge);
  const auto g = generate_er({4, 1.0, 1, 1, 0});
  EXPECT_THROW(oracle::brute_force_optimum(g, 0, 4), std::invalid_argument);
  const std::vector<std::int8_t> over{0, 0, 0, -1};
  EXPECT_THROW(oracle::brute_force_fixed_free_min(g, over, 2, 2), std::invalid_argument);
}

}  // namespace
}  // namespace gbp
