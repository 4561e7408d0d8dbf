#pragma once

// Subproblem processing shared by the sequential and parallel engines.

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>

#include "gbp/bounds.hpp"
#include "gbp/completion.hpp"
#include "gbp/solver.hpp"

namespace gbp::detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct SearchNode {
  Subproblem sp;
  Weight lower_bound = 0;
  std::int64_t priority = 0;
  std::uint64_t seq = 0;
};

/// Heap order: higher priority first, then the most recently created.
struct NodeBefore {
  bool operator()(const SearchNode& a, const SearchNode& b) const noexcept {
    return a.priority != b.priority ? a.priority < b.priority : a.seq < b.seq;
  }
};

struct WorkCounters {
  std::uint64_t explored = 0;
  std::uint64_t irrelevant = 0;
};

/// Completes `sp` if a completion rule applies (offering the solution; the
/// degree-zero rule is tied to the rebalancing contribution),
/// otherwise bounds it and returns a node when the bound is still below the
/// incumbent. `incumbent()` returns the current upper bound value.
template <class Incumbent, class Offer>
std::optional<SearchNode> make_node(Subproblem sp, const SolveOptions& options, Incumbent&& incumbent,
                                    Offer&& offer) {
  if (auto done = try_complete(sp, options.bounds.rebalance)) {
    offer(std::move(done->solution));
    return std::nullopt;
  }
  const Weight lb = lower_bound(sp, options.bounds);
  if (lb >= incumbent()) return std::nullopt;
  const std::int64_t prio = priority(sp, lb, options.strategy);
  return SearchNode{std::move(sp), lb, prio, 0};
}

/// One task: staleness check, branching, and child creation. Children that
/// survive are handed to `push`, side 0 last.
template <class Incumbent, class Offer, class Push>
void process_node(SearchNode node, const SolveOptions& options, WorkCounters& counters, Incumbent&& incumbent,
                  Offer&& offer, Push&& push) {
  if (node.lower_bound >= incumbent()) {
    ++counters.irrelevant;
    return;
  }
  ++counters.explored;
  const Vertex v = branch_vertex(node.sp);
  for (Side side : {kSide1, kSide0}) {
    if (auto child = make_node(node.sp.assign(v, side), options, incumbent, offer)) push(std::move(*child));
  }
}

}  // namespace gbp::detail
