#include "gbp/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gbp {

std::string BoundConfig::name() const {
  if (*this == trivial()) return "trivial";
  if (*this == with_rebalance()) return "rebalance";
  if (*this == with_high_degree()) return "highdegree";
  if (*this == full()) return "full";
  std::string out;
  auto add = [&](bool on, const char* flag) {
    if (!on) return;
    if (!out.empty()) out += '+';
    out += flag;
  };
  add(rebalance, "rebalance");
  add(high_degree, "hd");
  add(hd_doubling, "doubling");
  add(component, "component");
  return out;
}

BoundConfig BoundConfig::parse(const std::string& name) {
  if (name == "trivial") return trivial();
  if (name == "rebalance") return with_rebalance();
  if (name == "highdegree") return with_high_degree();
  if (name == "full") return full();
  BoundConfig cfg;
  std::size_t pos = 0;
  while (pos <= name.size()) {
    std::size_t end = name.find('+', pos);
    if (end == std::string::npos) end = name.size();
    const std::string flag = name.substr(pos, end - pos);
    if (flag == "rebalance") {
      cfg.rebalance = true;
    } else if (flag == "hd") {
      cfg.high_degree = true;
    } else if (flag == "doubling") {
      cfg.hd_doubling = true;
    } else if (flag == "component") {
      cfg.component = true;
    } else {
      throw std::invalid_argument("unknown bound configuration '" + name + "'");
    }
    pos = end + 1;
  }
  return cfg;
}

Weight basic_bound(const Subproblem& sp) {
  Weight sum = 0;
  for (Vertex v : sp.free_vertices()) sum += std::min(sp.weight_to(kSide0, v), sp.weight_to(kSide1, v));
  return sum;
}

RebalanceResult rebalance_bound(const Subproblem& sp) {
  RebalanceResult out;
  out.order.assign(sp.free_vertices().begin(), sp.free_vertices().end());
  std::sort(out.order.begin(), out.order.end(), [&](Vertex a, Vertex b) {
    const Weight da = sp.delta(a);
    const Weight db = sp.delta(b);
    return da != db ? da < db : a < b;
  });
  out.split = sp.remaining(kSide0);
  for (std::size_t i = 0; i < out.order.size(); ++i) {
    const Weight d = sp.delta(out.order[i]);
    out.value += i < out.split ? std::max<Weight>(0, d) : std::max<Weight>(0, -d);
  }
  return out;
}

HighDegreeResult high_degree_contribution(Subproblem& sp, bool doubling) {
  if (!sp.tracks_high_degree()) throw std::logic_error("subproblem does not track high-degree counters");
  HighDegreeResult out;
  const Side big = sp.remaining(kSide0) >= sp.remaining(kSide1) ? kSide0 : kSide1;
  const Side small = other(big);
  const std::size_t f_big = sp.remaining(big);
  const std::size_t f_small = sp.remaining(small);
  if (sp.free_count() == 0 || sp.approx_max_free_degree() <= f_small) return out;

  std::uint32_t max_degree = 0;
  std::vector<std::int64_t> penalties;
  for (Vertex v : sp.free_vertices()) {
    const std::uint32_t deg = sp.free_degree(v);
    max_degree = std::max(max_degree, deg);
    if (deg < f_big) continue;
    // All free neighbors below f_small means none of them charges the cut
    // edges at v, so v may claim their full weight.
    const std::int64_t mult = doubling && sp.approx_max_adjacent_degree(v) < f_small ? 2 : 1;
    const Weight t_big = sp.seen(big, v).seen_weight;
    const Weight t_small = sp.seen(small, v).seen_weight;
    out.degree.units += mult * t_big;
    penalties.push_back(mult * (t_small - t_big));
  }
  sp.refresh_max_free_degree(max_degree);
  out.high_degree_vertices = penalties.size();
  if (penalties.size() > f_big) {
    const auto excess = static_cast<std::ptrdiff_t>(penalties.size() - f_big);
    std::nth_element(penalties.begin(), penalties.begin() + excess - 1, penalties.end());
    out.rebalance.units = std::accumulate(penalties.begin(), penalties.begin() + excess, std::int64_t{0});
  }
  return out;
}

HalfWeight high_degree_bound(Subproblem& sp, bool doubling) { return high_degree_contribution(sp, doubling).degree; }

HalfWeight high_degree_rebalance(Subproblem& sp, bool doubling) {
  return high_degree_contribution(sp, doubling).rebalance;
}

Weight component_bound(Subproblem& sp) {
  const std::size_t f_big = std::max(sp.remaining(kSide0), sp.remaining(kSide1));
  if (sp.free_count() == 0 || sp.approx_max_component() <= f_big) return 0;

  const WeightedGraph& g = sp.graph();
  std::vector<char> visited(g.vertex_count(), 0);
  std::vector<Vertex> queue;
  queue.reserve(sp.free_count());
  std::size_t largest = 0;
  Weight largest_min_edge = 0;
  for (Vertex start : sp.free_vertices()) {
    if (visited[start]) continue;
    queue.clear();
    queue.push_back(start);
    visited[start] = 1;
    Weight min_edge = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      std::uint32_t max_adjacent = 0;
      for (const AdjEntry& e : g.neighbors(v)) {
        if (!sp.is_free(e.target)) continue;
        if (min_edge < 0 || e.weight < min_edge) min_edge = e.weight;
        max_adjacent = std::max(max_adjacent, sp.free_degree(e.target));
        if (!visited[e.target]) {
          visited[e.target] = 1;
          queue.push_back(e.target);
        }
      }
      sp.refresh_max_adjacent_degree(v, max_adjacent);
    }
    if (queue.size() > largest) {
      largest = queue.size();
      largest_min_edge = min_edge < 0 ? 0 : min_edge;
    }
  }
  sp.refresh_max_component(largest);
  return largest > f_big ? largest_min_edge : 0;
}

Weight lower_bound(Subproblem& sp, const BoundConfig& cfg) {
  Weight lb = sp.fixed_cut() + basic_bound(sp);
  if (cfg.rebalance) lb += rebalance_bound(sp).value;
  Weight free_free = 0;
  if (cfg.component) free_free = component_bound(sp);
  if (cfg.high_degree) {
    const HighDegreeResult hd = high_degree_contribution(sp, cfg.hd_doubling);
    free_free = std::max(free_free, (hd.degree + hd.rebalance).ceil());
  }
  return lb + free_free;
}

}  // namespace gbp
