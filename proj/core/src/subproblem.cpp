#include "gbp/subproblem.hpp"

#include <algorithm>
#include <bit>

namespace gbp {

std::size_t Bitmap::count() const noexcept {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

Subproblem::Subproblem(const WeightedGraph& graph) : graph_(&graph) {}

std::int8_t Subproblem::side_of(Vertex v) const noexcept {
  if (members_[0].test(v)) return 0;
  if (members_[1].test(v)) return 1;
  return -1;
}

std::vector<std::int8_t> Subproblem::sides() const {
  std::vector<std::int8_t> out(vertex_count());
  for (Vertex v = 0; v < out.size(); ++v) out[v] = side_of(v);
  return out;
}

Subproblem Subproblem::root(const WeightedGraph& graph, std::size_t s0, std::size_t s1, bool track_high_degree) {
  std::vector<std::int8_t> sides(graph.vertex_count(), -1);
  if (s0 == s1 && !sides.empty()) sides[0] = 0;
  return from_assignment(graph, sides, s0, s1, track_high_degree);
}

Subproblem Subproblem::from_assignment(const WeightedGraph& graph, std::span<const std::int8_t> sides,
                                       std::size_t s0, std::size_t s1, bool track_high_degree) {
  const std::size_t n = graph.vertex_count();
  if (s0 == 0 || s1 == 0) throw SubproblemError("both target sizes must be positive");
  if (s0 + s1 != n) throw SubproblemError("target sizes must sum to the vertex count");
  if (sides.size() != n) throw SubproblemError("assignment length differs from vertex count");

  Subproblem sp(graph);
  sp.sizes_ = {s0, s1};
  sp.track_hd_ = track_high_degree;
  sp.members_ = {Bitmap(n), Bitmap(n)};
  sp.free_ = Bitmap(n);
  for (Vertex v = 0; v < n; ++v) {
    switch (sides[v]) {
      case 0:
      case 1:
        sp.members_[sides[v]].set(v);
        ++sp.assigned_[sides[v]];
        break;
      case -1:
        sp.free_.set(v);
        sp.free_list_.push_back(v);
        break;
      default:
        throw SubproblemError("vertex " + std::to_string(v) + " has an invalid side value");
    }
  }
  if (sp.assigned_[0] > s0 || sp.assigned_[1] > s1) throw SubproblemError("assignment overfills a side");

  sp.d_ = {std::vector<Weight>(n, 0), std::vector<Weight>(n, 0)};
  sp.free_degree_.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (const AdjEntry& e : graph.neighbors(v)) {
      const std::int8_t side = sides[e.target];
      if (side < 0) {
        ++sp.free_degree_[v];
      } else {
        sp.d_[side][v] += e.weight;
      }
      if (sides[v] == 0 && side == 1) sp.fixed_cut_ += e.weight;
    }
  }

  sp.seen_ = {std::vector<SeenCounters>(n), std::vector<SeenCounters>(n)};
  for (Vertex v : sp.free_list_) {
    if (sp.free_degree_[v] == 0) ++sp.zero_free_degree_count_;
    sp.approx_max_free_degree_ = std::max(sp.approx_max_free_degree_, sp.free_degree_[v]);
    if (!track_high_degree) continue;
    auto adj = graph.neighbors(v);
    for (int s = 0; s < 2; ++s) {
      SeenCounters& c = sp.seen_[s][v];
      const std::uint32_t target = seen_target(sp.free_degree_[v], sp.remaining(static_cast<Side>(s)));
      for (std::uint32_t i = 0; c.seen_count < target; ++i) {
        if (sides[adj[i].target] >= 0) continue;
        ++c.seen_count;
        c.seen_weight += adj[i].weight;
        c.scan_index = i + 1;
      }
    }
  }
  sp.approx_max_component_ = sp.free_list_.size();
  sp.max_adjacent_degree_.resize(n);
  for (Vertex v = 0; v < n; ++v) sp.max_adjacent_degree_[v] = graph.max_neighbor_degree(v);
  return sp;
}

void Subproblem::remove_from_free_list(Vertex v) {
  auto it = std::lower_bound(free_list_.begin(), free_list_.end(), v);
  free_list_.erase(it);
}

Subproblem Subproblem::assign(Vertex v, Side side) const {
  if (v >= vertex_count() || !free_.test(v)) throw SubproblemError("vertex " + std::to_string(v) + " is not free");
  if (remaining(side) == 0) throw SubproblemError("side " + std::to_string(int(side)) + " is already full");

  Subproblem child = *this;
  child.free_.reset(v);
  child.members_[side].set(v);
  ++child.assigned_[side];
  child.remove_from_free_list(v);
  child.fixed_cut_ += d_[other(side)][v];
  if (free_degree_[v] == 0) --child.zero_free_degree_count_;

  const auto adj = graph_->neighbors(v);
  for (const AdjEntry& e : adj) {
    const Vertex u = e.target;
    if (!child.free_.test(u)) continue;
    child.d_[side][u] += e.weight;
    if (--child.free_degree_[u] == 0) ++child.zero_free_degree_count_;
  }

  if (track_hd_) {
    // Neighbors lose the entry pointing at v on both sides; afterwards every
    // free vertex may need one more seen edge on `side` because f_side shrank.
    for (const AdjEntry& e : adj) {
      if (!child.free_.test(e.target)) continue;
      child.repair_seen(e.target, kSide0, e.cross);
      child.repair_seen(e.target, kSide1, e.cross);
    }
    for (Vertex u : child.free_list_) child.repair_seen(u, side, std::nullopt);
  }
  return child;
}

void Subproblem::repair_seen(Vertex v, Side s, std::optional<std::uint32_t> removed_pos) {
  const auto adj = graph_->neighbors(v);
  SeenCounters& c = seen_[s][v];
  auto step_back_over_fixed = [&] {
    while (c.scan_index > 0 && !free_.test(adj[c.scan_index - 1].target)) {
      --c.scan_index;
      ++scan_steps_;
    }
  };

  if (removed_pos && *removed_pos < c.scan_index) {
    c.seen_weight -= adj[*removed_pos].weight;
    --c.seen_count;
    step_back_over_fixed();
  }
  const std::uint32_t target = seen_target(free_degree_[v], remaining(s));
  while (c.seen_count < target) {
    std::uint32_t i = c.scan_index;
    while (!free_.test(adj[i].target)) {
      ++i;
      ++scan_steps_;
    }
    c.seen_weight += adj[i].weight;
    ++c.seen_count;
    c.scan_index = i + 1;
    ++scan_steps_;
  }
  while (c.seen_count > target) {
    --c.scan_index;
    ++scan_steps_;
    c.seen_weight -= adj[c.scan_index].weight;
    --c.seen_count;
    step_back_over_fixed();
  }
}

void Subproblem::refresh_max_free_degree(std::uint32_t actual) noexcept {
  approx_max_free_degree_ = std::min(approx_max_free_degree_, actual);
}

void Subproblem::refresh_max_component(std::size_t actual) noexcept {
  approx_max_component_ = std::min(approx_max_component_, actual);
}

void Subproblem::refresh_max_adjacent_degree(Vertex v, std::uint32_t actual) noexcept {
  max_adjacent_degree_[v] = std::min(max_adjacent_degree_[v], actual);
}

std::optional<std::string> first_difference(const Subproblem& a, const Subproblem& b) {
  auto field = [](const std::string& name) { return std::optional<std::string>(name); };
  auto at = [](const std::string& name, Vertex v) {
    return std::optional<std::string>(name + " at vertex " + std::to_string(v));
  };
  if (a.graph_ != b.graph_) return field("graph");
  if (a.sizes_ != b.sizes_) return field("target sizes");
  if (a.assigned_ != b.assigned_) return field("assigned counts");
  if (a.members_ != b.members_) return field("side bitmaps");
  if (!(a.free_ == b.free_)) return field("free bitmap");
  if (a.free_list_ != b.free_list_) return field("free list");
  if (a.fixed_cut_ != b.fixed_cut_) return field("fixed cut");
  if (a.zero_free_degree_count_ != b.zero_free_degree_count_) return field("zero free degree count");
  if (a.track_hd_ != b.track_hd_) return field("high-degree tracking flag");
  for (Vertex v : a.free_list_) {
    if (a.d_[0][v] != b.d_[0][v]) return at("D0", v);
    if (a.d_[1][v] != b.d_[1][v]) return at("D1", v);
    if (a.free_degree_[v] != b.free_degree_[v]) return at("free degree", v);
    for (int s = 0; s < 2; ++s) {
      const SeenCounters& x = a.seen_[s][v];
      const SeenCounters& y = b.seen_[s][v];
      const std::string side = " (side " + std::to_string(s) + ")";
      if (x.scan_index != y.scan_index) return at("scan index" + side, v);
      if (x.seen_count != y.seen_count) return at("seen count" + side, v);
      if (x.seen_weight != y.seen_weight) return at("seen weight" + side, v);
    }
  }
  return std::nullopt;
}

std::optional<std::string> Subproblem::check_consistency() const {
  const auto sides_now = sides();
  const Subproblem fresh = from_assignment(*graph_, sides_now, sizes_[0], sizes_[1], track_hd_);
  if (auto diff = first_difference(*this, fresh)) return diff;

  std::uint32_t max_deg = 0;
  for (Vertex v : free_list_) max_deg = std::max(max_deg, free_degree_[v]);
  if (approx_max_free_degree_ < max_deg) return std::string("max free degree estimate below actual");
  std::vector<char> visited(vertex_count(), 0);
  std::vector<Vertex> queue;
  for (Vertex start : free_list_) {
    if (visited[start]) continue;
    queue.assign(1, start);
    visited[start] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const AdjEntry& e : graph_->neighbors(queue[head])) {
        if (free_.test(e.target) && !visited[e.target]) {
          visited[e.target] = 1;
          queue.push_back(e.target);
        }
      }
    }
    if (approx_max_component_ < queue.size()) return std::string("component estimate below actual");
  }
  for (Vertex v : free_list_) {
    for (const AdjEntry& e : graph_->neighbors(v)) {
      if (free_.test(e.target) && max_adjacent_degree_[v] < free_degree_[e.target]) {
        return "adjacent degree estimate below actual at vertex " + std::to_string(v);
      }
    }
  }
  return std::nullopt;
}

}  // namespace gbp
