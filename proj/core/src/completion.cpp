#include "gbp/completion.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gbp/bounds.hpp"

namespace gbp {

Weight cut_value(const WeightedGraph& g, std::span<const Side> assignment) {
  Weight cut = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (const AdjEntry& e : g.neighbors(u)) {
      if (u < e.target && assignment[u] != assignment[e.target]) cut += e.weight;
    }
  }
  return cut;
}

Solution Solution::evaluate(const WeightedGraph& g, std::vector<Side> assignment, std::size_t s0, std::size_t s1) {
  if (assignment.size() != g.vertex_count()) throw std::invalid_argument("assignment length differs from vertex count");
  const auto zeros = static_cast<std::size_t>(std::count(assignment.begin(), assignment.end(), kSide0));
  if (zeros != s0 || assignment.size() - zeros != s1) {
    throw std::invalid_argument("assignment has " + std::to_string(zeros) + "/" +
                                std::to_string(assignment.size() - zeros) + " vertices, expected " +
                                std::to_string(s0) + "/" + std::to_string(s1));
  }
  Solution s;
  s.value = cut_value(g, assignment);
  s.assignment = std::move(assignment);
  return s;
}

std::size_t Solution::count(Side s) const {
  return static_cast<std::size_t>(std::count(assignment.begin(), assignment.end(), s));
}

namespace {

std::vector<Side> fixed_part(const Subproblem& sp) {
  std::vector<Side> out(sp.vertex_count(), kSide0);
  for (Vertex v = 0; v < out.size(); ++v) {
    if (sp.in_side(v, kSide1)) out[v] = kSide1;
  }
  return out;
}

Solution finish(const Subproblem& sp, std::vector<Side> assignment) {
  return Solution::evaluate(sp.graph(), std::move(assignment), sp.target_size(kSide0), sp.target_size(kSide1));
}

Solution all_free_to(const Subproblem& sp, Side s) {
  auto assignment = fixed_part(sp);
  for (Vertex v : sp.free_vertices()) assignment[v] = s;
  return finish(sp, std::move(assignment));
}

// v alone joins `lonely`; every other free vertex joins the other side, so
// all free edges at v cross. The cost relative to sending everything to the
// other side is D_other[v] - D_lonely[v] + (free edge weight at v).
Solution one_missing(const Subproblem& sp, Side lonely) {
  const Side rest = other(lonely);
  Vertex best = sp.free_vertices().front();
  Weight best_cost = 0;
  bool first = true;
  for (Vertex v : sp.free_vertices()) {
    const Weight cost = sp.weight_to(rest, v) - sp.weight_to(lonely, v) + sp.free_weight(v);
    if (first || cost < best_cost) {
      best = v;
      best_cost = cost;
      first = false;
    }
  }
  auto assignment = fixed_part(sp);
  for (Vertex v : sp.free_vertices()) assignment[v] = v == best ? lonely : rest;
  return finish(sp, std::move(assignment));
}

}  // namespace

Solution rebalancing_completion(const Subproblem& sp) {
  const RebalanceResult r = rebalance_bound(sp);
  auto assignment = fixed_part(sp);
  for (std::size_t i = 0; i < r.order.size(); ++i) assignment[r.order[i]] = i < r.split ? kSide0 : kSide1;
  return finish(sp, std::move(assignment));
}

Weight rebalancing_completion_value(const Subproblem& sp) { return rebalancing_completion(sp).value; }

std::optional<Completion> try_complete(const Subproblem& sp, bool degree_zero) {
  for (Side s : {kSide0, kSide1}) {
    if (sp.remaining(s) == 0) return Completion{all_free_to(sp, other(s)), CompletionRule::side_full};
  }
  for (Side s : {kSide0, kSide1}) {
    if (sp.remaining(s) == 1) return Completion{one_missing(sp, s), CompletionRule::one_missing};
  }
  if (degree_zero && sp.zero_free_degree_count() == sp.free_count()) {
    return Completion{rebalancing_completion(sp), CompletionRule::degree_zero};
  }
  return std::nullopt;
}

Solution greedy_initial_solution(const WeightedGraph& g, std::size_t s0, std::size_t s1) {
  const std::size_t n = g.vertex_count();
  if (s0 == 0 || s1 == 0 || s0 + s1 != n) throw std::invalid_argument("infeasible target sizes");

  std::vector<Weight> attachment(n, 0);
  std::vector<char> ordered(n, 0);
  std::vector<Side> assignment(n, kSide1);
  Vertex next = 0;
  for (std::size_t step = 0; step < s0; ++step) {
    ordered[next] = 1;
    assignment[next] = kSide0;
    for (const AdjEntry& e : g.neighbors(next)) attachment[e.target] += e.weight;
    bool found = false;
    for (Vertex v = 0; v < n; ++v) {
      if (ordered[v]) continue;
      if (!found || attachment[v] > attachment[next]) {
        next = v;
        found = true;
      }
    }
  }
  return Solution::evaluate(g, std::move(assignment), s0, s1);
}

}  // namespace gbp
