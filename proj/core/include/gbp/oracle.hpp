#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>

#include "gbp/completion.hpp"
#include "gbp/graph.hpp"
#include "gbp/subproblem.hpp"

// Exhaustive reference answers for small instances. Everything here works
// from the raw edge list and the side map only; none of the incremental
// subproblem state or bound code is consulted.

namespace gbp::oracle {

class TooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr std::size_t kMaxVertices = 24;
constexpr std::size_t kMaxFree = 22;

struct OracleResult {
  Weight optimum = 0;
  Solution witness;
  std::uint64_t enumerated = 0;
};

/// Minimum cut over every split with |V0| = s0. When s0 == s1 vertex 0 is
/// held on side 0, halving the enumeration.
OracleResult brute_force_optimum(const WeightedGraph& g, std::size_t s0, std::size_t s1);

/// Minimum over completions of w(V0 \ U0, U1) + w(U0, V1 \ U1).
/// `sides[v]` is 0, 1, or -1 for free.
Weight brute_force_fixed_free_min(const WeightedGraph& g, std::span<const std::int8_t> sides, std::size_t s0,
                                  std::size_t s1);
/// Minimum over completions of w(V0 \ U0, V1 \ U1).
Weight brute_force_free_free_min(const WeightedGraph& g, std::span<const std::int8_t> sides, std::size_t s0,
                                 std::size_t s1);
/// Minimum over completions of the whole cut.
Weight brute_force_completion_min(const WeightedGraph& g, std::span<const std::int8_t> sides, std::size_t s0,
                                  std::size_t s1);

Weight brute_force_fixed_free_min(const Subproblem& sp);
Weight brute_force_free_free_min(const Subproblem& sp);
Weight brute_force_completion_min(const Subproblem& sp);

}  // namespace gbp::oracle
