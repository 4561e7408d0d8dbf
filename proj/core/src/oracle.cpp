#include "gbp/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

namespace gbp::oracle {

namespace {

// Calls visit(chosen) for every k-subset of {0..n-1}, lexicographically.
template <class Visit>
void for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(static_cast<const std::vector<std::size_t>&>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

enum class Term { all, fixed_free, free_free };

struct Completions {
  std::vector<Vertex> free;
  std::size_t to_side0 = 0;
};

Completions prepare(const WeightedGraph& g, std::span<const std::int8_t> sides, std::size_t s0, std::size_t s1) {
  if (sides.size() != g.vertex_count() || s0 + s1 != g.vertex_count()) {
    throw std::invalid_argument("assignment does not match the instance");
  }
  Completions c;
  std::size_t in0 = 0;
  std::size_t in1 = 0;
  for (Vertex v = 0; v < sides.size(); ++v) {
    if (sides[v] == 0) ++in0;
    else if (sides[v] == 1) ++in1;
    else c.free.push_back(v);
  }
  if (in0 > s0 || in1 > s1) throw std::invalid_argument("assignment overfills a side");
  if (c.free.size() > kMaxFree) throw TooLarge("too many free vertices for enumeration");
  c.to_side0 = s0 - in0;
  return c;
}

Weight minimize(const WeightedGraph& g, std::span<const std::int8_t> sides, std::size_t s0, std::size_t s1,
                Term term) {
  const Completions c = prepare(g, sides, s0, s1);
  const std::vector<Edge> edges = g.edges();
  std::vector<std::int8_t> full(sides.begin(), sides.end());
  Weight best = std::numeric_limits<Weight>::max();
  for_each_combination(c.free.size(), c.to_side0, [&](const std::vector<std::size_t>& chosen) {
    for (Vertex v : c.free) full[v] = 1;
    for (std::size_t i : chosen) full[c.free[i]] = 0;
    Weight total = 0;
    for (const Edge& e : edges) {
      if (full[e.u] == full[e.v]) continue;
      const bool u_free = sides[e.u] < 0;
      const bool v_free = sides[e.v] < 0;
      const bool counts = term == Term::all || (term == Term::free_free && u_free && v_free) ||
                          (term == Term::fixed_free && u_free != v_free);
      if (counts) total += e.w;
    }
    if (total < best) best = total;
  });
  return best;
}

}  // namespace

OracleResult brute_force_optimum(const WeightedGraph& g, std::size_t s0, std::size_t s1) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxVertices) throw TooLarge("instance has " + std::to_string(n) + " vertices, oracle limit is " +
                                       std::to_string(kMaxVertices));
  if (s0 == 0 || s1 == 0 || s0 + s1 != n) throw std::invalid_argument("infeasible target sizes");

  const std::vector<Edge> edges = g.edges();
  const bool halve = s0 == s1;
  const std::size_t pool = halve ? n - 1 : n;
  const std::size_t pick = halve ? s0 - 1 : s0;
  const std::size_t offset = halve ? 1 : 0;

  OracleResult result;
  result.optimum = std::numeric_limits<Weight>::max();
  std::vector<Side> side(n);
  for_each_combination(pool, pick, [&](const std::vector<std::size_t>& chosen) {
    std::fill(side.begin(), side.end(), kSide1);
    if (halve) side[0] = kSide0;
    for (std::size_t i : chosen) side[i + offset] = kSide0;
    Weight cut = 0;
    for (const Edge& e : edges) {
      if (side[e.u] != side[e.v]) cut += e.w;
    }
    ++result.enumerated;
    if (cut < result.optimum) {
      result.optimum = cut;
      result.witness.assignment = side;
      result.witness.value = cut;
    }
  });
  return result;
}

Weight brute_force_fixed_free_min(const WeightedGraph& g, std::span<const std::int8_t> sides, std::size_t s0,
                                  std::size_t s1) {
  return minimize(g, sides, s0, s1, Term::fixed_free);
}

Weight brute_force_free_free_min(const WeightedGraph& g, std::span<const std::int8_t> sides, std::size_t s0,
                                 std::size_t s1) {
  return minimize(g, sides, s0, s1, Term::free_free);
}

Weight brute_force_completion_min(const WeightedGraph& g, std::span<const std::int8_t> sides, std::size_t s0,
                                  std::size_t s1) {
  return minimize(g, sides, s0, s1, Term::all);
}

Weight brute_force_fixed_free_min(const Subproblem& sp) {
  return brute_force_fixed_free_min(sp.graph(), sp.sides(), sp.target_size(kSide0), sp.target_size(kSide1));
}

Weight brute_force_free_free_min(const Subproblem& sp) {
  return brute_force_free_free_min(sp.graph(), sp.sides(), sp.target_size(kSide0), sp.target_size(kSide1));
}

Weight brute_force_completion_min(const Subproblem& sp) {
  return brute_force_completion_min(sp.graph(), sp.sides(), sp.target_size(kSide0), sp.target_size(kSide1));
}

}  // namespace gbp::oracle
