#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbp/graph.hpp"
#include "gbp/types.hpp"

namespace gbp {

class SubproblemError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Fixed-size bit set.
class Bitmap {
 public:
  Bitmap() = default;
  explicit Bitmap(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  std::size_t count() const noexcept;

  bool operator==(const Bitmap&) const = default;

 private:
  std::vector<std::uint64_t> words_;
};

/// Per-vertex, per-side bookkeeping for the high-degree bound.
///
/// For a free vertex v and side i the first `seen_count` free entries of v's
/// weight-sorted adjacency array are "seen", where
///   seen_count = min(deg'(v), max(0, deg'(v) - f_i + 1)).
/// `scan_index` is one past the last seen entry (0 when nothing is seen) and
/// `seen_weight` is the total weight of the seen entries.
struct SeenCounters {
  std::uint32_t scan_index = 0;
  std::uint32_t seen_count = 0;
  Weight seen_weight = 0;

  bool operator==(const SeenCounters&) const = default;
};

/// Partial assignment (U0, U1) of a graph together with the incrementally
/// maintained state the bounds read.
///
/// Children are produced by value with assign(); the parent is never
/// modified. The graph must outlive every subproblem built from it.
class Subproblem {
 public:
  /// The root of the search. When s0 == s1 vertex 0 is pre-assigned to
  /// side 0, eliminating mirrored solutions.
  static Subproblem root(const WeightedGraph& graph, std::size_t s0, std::size_t s1,
                         bool track_high_degree = true);

  /// Builds the state for an arbitrary partial assignment directly from the
  /// definitions. `sides[v]` is 0, 1, or -1 for free.
  static Subproblem from_assignment(const WeightedGraph& graph, std::span<const std::int8_t> sides,
                                    std::size_t s0, std::size_t s1, bool track_high_degree = true);

  /// Child with `v` moved from F to U_side.
  Subproblem assign(Vertex v, Side side) const;

  const WeightedGraph& graph() const noexcept { return *graph_; }
  std::size_t vertex_count() const noexcept { return graph_->vertex_count(); }
  std::size_t target_size(Side s) const noexcept { return sizes_[s]; }
  std::size_t assigned_count(Side s) const noexcept { return assigned_[s]; }
  /// f_i = s_i - |U_i|.
  std::size_t remaining(Side s) const noexcept { return sizes_[s] - assigned_[s]; }
  std::size_t free_count() const noexcept { return free_list_.size(); }
  std::size_t depth() const noexcept { return assigned_[0] + assigned_[1]; }

  bool is_free(Vertex v) const noexcept { return free_.test(v); }
  bool in_side(Vertex v, Side s) const noexcept { return members_[s].test(v); }
  /// 0, 1, or -1 for free.
  std::int8_t side_of(Vertex v) const noexcept;
  std::vector<std::int8_t> sides() const;
  std::span<const Vertex> free_vertices() const noexcept { return free_list_; }

  /// D_i[v] = w(v, U_i); meaningful for free v.
  Weight weight_to(Side s, Vertex v) const noexcept { return d_[s][v]; }
  /// delta(v) = D1[v] - D0[v].
  Weight delta(Vertex v) const noexcept { return d_[1][v] - d_[0][v]; }
  /// Total weight of the edges from free v to other free vertices.
  Weight free_weight(Vertex v) const noexcept { return graph_->weighted_degree(v) - d_[0][v] - d_[1][v]; }
  /// w(U0, U1).
  Weight fixed_cut() const noexcept { return fixed_cut_; }
  std::uint32_t free_degree(Vertex v) const noexcept { return free_degree_[v]; }
  std::size_t zero_free_degree_count() const noexcept { return zero_free_degree_count_; }

  bool tracks_high_degree() const noexcept { return track_hd_; }
  const SeenCounters& seen(Side s, Vertex v) const noexcept { return seen_[s][v]; }

  /// Over-estimates carried from the parent; lowered when a bound computes
  /// the exact value. Never increase along a branch.
  std::uint32_t approx_max_free_degree() const noexcept { return approx_max_free_degree_; }
  std::size_t approx_max_component() const noexcept { return approx_max_component_; }
  std::uint32_t approx_max_adjacent_degree(Vertex v) const noexcept { return max_adjacent_degree_[v]; }

  void refresh_max_free_degree(std::uint32_t actual) noexcept;
  void refresh_max_component(std::size_t actual) noexcept;
  void refresh_max_adjacent_degree(Vertex v, std::uint32_t actual) noexcept;

  /// Checks every invariant against a from-scratch recomputation. Returns a
  /// description of the first mismatch, or nothing when consistent.
  std::optional<std::string> check_consistency() const;

  /// Field-by-field comparison of the exactly maintained state (estimates
  /// excluded). Returns the first differing field.
  friend std::optional<std::string> first_difference(const Subproblem& a, const Subproblem& b);

  /// Total adjacency entries crossed by high-degree counter scans while
  /// producing this subproblem from its root.
  std::uint64_t scan_steps() const noexcept { return scan_steps_; }

 private:
  explicit Subproblem(const WeightedGraph& graph);

  void remove_from_free_list(Vertex v);
  void repair_seen(Vertex v, Side s, std::optional<std::uint32_t> removed_pos);

  const WeightedGraph* graph_;
  std::array<std::size_t, 2> sizes_{};
  std::array<std::size_t, 2> assigned_{};
  std::array<Bitmap, 2> members_;
  Bitmap free_;
  std::vector<Vertex> free_list_;
  std::array<std::vector<Weight>, 2> d_;
  Weight fixed_cut_ = 0;
  std::vector<std::uint32_t> free_degree_;
  std::size_t zero_free_degree_count_ = 0;
  bool track_hd_ = true;
  std::array<std::vector<SeenCounters>, 2> seen_;
  std::uint32_t approx_max_free_degree_ = 0;
  std::size_t approx_max_component_ = 0;
  std::vector<std::uint32_t> max_adjacent_degree_;
  std::uint64_t scan_steps_ = 0;
};

/// Number of seen edges required by the invariant on SeenCounters.
constexpr std::uint32_t seen_target(std::uint32_t free_degree, std::size_t remaining) noexcept {
  if (free_degree == 0) return 0;
  if (remaining == 0) return free_degree;
  if (free_degree + 1 <= remaining) return 0;
  return static_cast<std::uint32_t>(free_degree + 1 - remaining);
}

}  // namespace gbp
