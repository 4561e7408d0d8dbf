#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gbp/bounds.hpp"
#include "gbp/completion.hpp"
#include "gbp/graph.hpp"
#include "gbp/subproblem.hpp"

namespace gbp {

/// Order in which open subproblems are processed.
///  - dfs: last in, first out.
///  - best_first_lb: smallest lower bound first.
///  - gap: smallest (rebalancing completion value - lower bound) first.
/// The strategy changes traversal order and counts, never the optimum.
enum class SearchStrategy { dfs, best_first_lb, gap };

std::string to_string(SearchStrategy s);
/// Accepts "dfs", "lb" and "gap". Throws std::invalid_argument.
SearchStrategy parse_strategy(const std::string& name);

struct SolveOptions {
  BoundConfig bounds = BoundConfig::full();
  SearchStrategy strategy = SearchStrategy::dfs;
  /// Starting incumbent; the greedy maximum-adjacency solution when empty.
  std::optional<Solution> initial;
};

struct SolveResult {
  Solution best;
  /// Dequeued subproblems whose bound was still below the incumbent.
  std::uint64_t subproblems_explored = 0;
  /// Dequeued subproblems discarded because the incumbent had overtaken
  /// their stored bound.
  std::uint64_t irrelevant_tasks = 0;
  /// Incumbent improvements, counting the starting solution.
  std::uint64_t solutions_found = 0;
  double time_total = 0.0;
  double time_to_optimum = 0.0;
  BoundConfig bounds;
  SearchStrategy strategy = SearchStrategy::dfs;
  std::size_t threads = 1;
  /// Incumbent values in the order they were accepted.
  std::vector<Weight> incumbent_history;
};

/// Free vertex with the largest total weight of free edges: assigning it moves
/// the most free-free weight into the fixed-free term. Ties go to the larger
/// D0 + D1, then the lower id.
Vertex branch_vertex(const Subproblem& sp);

/// Larger values are processed first. `lower_bound` is the bound already
/// computed for `sp`.
std::int64_t priority(const Subproblem& sp, Weight lower_bound, SearchStrategy strategy);

/// Exact sequential branch and bound. Deterministic: equal inputs give equal
/// results, counts included. Throws std::invalid_argument on infeasible sizes.
SolveResult solve_sequential(const WeightedGraph& g, std::size_t s0, std::size_t s1, const SolveOptions& options = {});

}  // namespace gbp
