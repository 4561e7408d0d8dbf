#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gbp/graph.hpp"
#include "gbp/subproblem.hpp"
#include "gbp/types.hpp"

namespace gbp {

/// A feasible bipartition and its cut weight.
struct Solution {
  std::vector<Side> assignment;
  Weight value = 0;

  /// Checks the cardinalities and computes the cut by edge enumeration.
  /// Throws std::invalid_argument if the sizes do not match.
  static Solution evaluate(const WeightedGraph& g, std::vector<Side> assignment, std::size_t s0, std::size_t s1);

  std::size_t count(Side s) const;
};

/// Direct cut weight of a full assignment, O(n + m).
Weight cut_value(const WeightedGraph& g, std::span<const Side> assignment);

enum class CompletionRule { side_full, one_missing, degree_zero };

struct Completion {
  Solution solution;
  CompletionRule rule;
};

/// Solves the subproblem outright when one of these holds, checked in order:
/// a side is full; a side misses exactly one vertex; no free vertex has a
/// free edge (only with `degree_zero`). Each returned completion is optimal
/// for the subproblem.
std::optional<Completion> try_complete(const Subproblem& sp, bool degree_zero = true);

/// Cut weight of the completion induced by rebalance ordering, free-free
/// edges included. Feasible, hence an upper bound for the subproblem.
Weight rebalancing_completion_value(const Subproblem& sp);
Solution rebalancing_completion(const Subproblem& sp);

/// Maximum-adjacency ordering from vertex 0 (ties to the lowest id); the
/// first s0 vertices form side 0.
Solution greedy_initial_solution(const WeightedGraph& g, std::size_t s0, std::size_t s1);

}  // namespace gbp
