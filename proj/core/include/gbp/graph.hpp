#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gbp/types.hpp"

namespace gbp {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct Edge {
  Vertex u;
  Vertex v;
  Weight w;

  bool operator==(const Edge&) const = default;
};

/// One entry of an adjacency array. `cross` is the position of the owning
/// vertex inside `target`'s adjacency array.
struct AdjEntry {
  Vertex target;
  Weight weight;
  std::uint32_t cross;

  bool operator==(const AdjEntry&) const = default;
};

/// Immutable undirected graph stored as an array of adjacency arrays.
///
/// Every adjacency array is sorted by non-decreasing weight (ties by neighbor
/// id) and each edge appears once in the array of both endpoints. Safe for
/// concurrent read access.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  /// Throws GraphError on self-loops, duplicate edges, negative weights or
  /// out-of-range endpoints.
  static WeightedGraph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return entries_.size() / 2; }

  std::span<const AdjEntry> neighbors(Vertex v) const noexcept {
    return {entries_.data() + offsets_[v], entries_.data() + offsets_[v + 1]};
  }
  std::uint32_t degree(Vertex v) const noexcept {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  std::uint32_t max_degree() const noexcept { return max_degree_; }
  /// Sum of the weights of the edges at `v`.
  Weight weighted_degree(Vertex v) const noexcept { return weighted_degree_[v]; }
  /// Largest degree among the neighbors of `v`; 0 for isolated vertices.
  std::uint32_t max_neighbor_degree(Vertex v) const noexcept { return max_neighbor_degree_[v]; }

  /// Edges with u < v, sorted by (u, v).
  std::vector<Edge> edges() const;
  Weight total_weight() const noexcept { return total_weight_; }

  /// Re-checks every structural invariant in O(n + m). Throws GraphError.
  void validate() const;

  bool operator==(const WeightedGraph& o) const {
    return offsets_ == o.offsets_ && entries_ == o.entries_;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<AdjEntry> entries_;
  std::vector<std::uint32_t> max_neighbor_degree_;
  std::vector<Weight> weighted_degree_;
  std::uint32_t max_degree_ = 0;
  Weight total_weight_ = 0;
};

struct ErdosRenyiParams {
  std::size_t n = 0;
  double p = 0.0;
  Weight wmin = 1;
  Weight wmax = 1;
  std::uint64_t seed = 0;
};

/// G(n, p) random graph with integer weights drawn uniformly from
/// [wmin, wmax]. Bit-reproducible for fixed parameters: the engine is
/// std::mt19937_64 and the sampling transforms are defined here rather than
/// taken from <random> distributions, whose output is implementation-defined.
WeightedGraph generate_er(const ErdosRenyiParams& params);

/// Edge-list text format: header "n m", then m lines "u v w". Lines starting
/// with '#' and blank lines are ignored.
WeightedGraph parse_graph(std::string_view text);
/// Emits the canonical edge-list form, edges sorted by (min, max) endpoint.
std::string serialize_graph(const WeightedGraph& g);

WeightedGraph read_graph_file(const std::string& path);
void write_graph_file(const WeightedGraph& g, const std::string& path);

}  // namespace gbp
