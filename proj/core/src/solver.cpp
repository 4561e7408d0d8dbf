#include "gbp/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "search_node.hpp"

namespace gbp {

std::string to_string(SearchStrategy s) {
  switch (s) {
    case SearchStrategy::dfs:
      return "dfs";
    case SearchStrategy::best_first_lb:
      return "lb";
    case SearchStrategy::gap:
      return "gap";
  }
  return "?";
}

SearchStrategy parse_strategy(const std::string& name) {
  if (name == "dfs") return SearchStrategy::dfs;
  if (name == "lb") return SearchStrategy::best_first_lb;
  if (name == "gap") return SearchStrategy::gap;
  throw std::invalid_argument("unknown strategy '" + name + "' (expected dfs, lb or gap)");
}

Vertex branch_vertex(const Subproblem& sp) {
  auto free = sp.free_vertices();
  if (free.empty()) throw std::logic_error("no free vertex to branch on");
  Vertex best = free.front();
  Weight best_free = -1;
  Weight best_fixed = -1;
  for (Vertex v : free) {
    const Weight free_weight = sp.free_weight(v);
    const Weight fixed = sp.weight_to(kSide0, v) + sp.weight_to(kSide1, v);
    if (free_weight > best_free || (free_weight == best_free && fixed > best_fixed)) {
      best = v;
      best_free = free_weight;
      best_fixed = fixed;
    }
  }
  return best;
}

std::int64_t priority(const Subproblem& sp, Weight lower_bound, SearchStrategy strategy) {
  switch (strategy) {
    case SearchStrategy::dfs:
      return static_cast<std::int64_t>(sp.depth());
    case SearchStrategy::best_first_lb:
      return -lower_bound;
    case SearchStrategy::gap:
      return -(rebalancing_completion_value(sp) - lower_bound);
  }
  return 0;
}

SolveResult solve_sequential(const WeightedGraph& g, std::size_t s0, std::size_t s1, const SolveOptions& options) {
  if (s0 == 0 || s1 == 0 || s0 + s1 != g.vertex_count()) throw std::invalid_argument("infeasible target sizes");
  const auto start = detail::Clock::now();

  SolveResult result;
  result.bounds = options.bounds;
  result.strategy = options.strategy;
  result.threads = 1;
  result.best = options.initial
                    ? Solution::evaluate(g, options.initial->assignment, s0, s1)
                    : greedy_initial_solution(g, s0, s1);
  result.solutions_found = 1;
  result.incumbent_history.push_back(result.best.value);
  result.time_to_optimum = detail::seconds_since(start);

  auto incumbent = [&] { return result.best.value; };
  auto offer = [&](Solution s) {
    if (s.value >= result.best.value) return;
    result.best = std::move(s);
    ++result.solutions_found;
    result.incumbent_history.push_back(result.best.value);
    result.time_to_optimum = detail::seconds_since(start);
  };

  std::vector<detail::SearchNode> open;
  std::uint64_t seq = 0;
  auto push = [&](detail::SearchNode node) {
    node.seq = seq++;
    open.push_back(std::move(node));
    std::push_heap(open.begin(), open.end(), detail::NodeBefore{});
  };

  const bool track_hd = options.bounds.high_degree;
  if (auto root = detail::make_node(Subproblem::root(g, s0, s1, track_hd), options, incumbent, offer)) {
    push(std::move(*root));
  }

  detail::WorkCounters counters;
  while (!open.empty()) {
    std::pop_heap(open.begin(), open.end(), detail::NodeBefore{});
    detail::SearchNode node = std::move(open.back());
    open.pop_back();
    detail::process_node(std::move(node), options, counters, incumbent, offer, push);
  }

  result.subproblems_explored = counters.explored;
  result.irrelevant_tasks = counters.irrelevant;
  result.time_total = detail::seconds_since(start);
  return result;
}

}  // namespace gbp
