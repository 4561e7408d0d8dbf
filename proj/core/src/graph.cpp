#include "gbp/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <unordered_map>

namespace gbp {

ParseError::ParseError(std::size_t line, const std::string& what)
    : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::uint64_t pair_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::string describe(const Edge& e) {
  return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ", " + std::to_string(e.w) + ")";
}

void check_edge(std::size_t n, const Edge& e) {
  if (e.u >= n || e.v >= n) throw GraphError("edge " + describe(e) + " has an endpoint out of range");
  if (e.u == e.v) throw GraphError("edge " + describe(e) + " is a self-loop");
  if (e.w < 0) throw GraphError("edge " + describe(e) + " has negative weight");
}

}  // namespace

WeightedGraph WeightedGraph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n > std::numeric_limits<Vertex>::max()) throw GraphError("too many vertices");

  std::vector<std::uint64_t> keys;
  keys.reserve(edges.size());
  for (const Edge& e : edges) {
    check_edge(n, e);
    keys.push_back(pair_key(e.u, e.v));
  }
  std::sort(keys.begin(), keys.end());
  if (auto dup = std::adjacent_find(keys.begin(), keys.end()); dup != keys.end()) {
    throw GraphError("duplicate edge {" + std::to_string(*dup >> 32) + ", " +
                     std::to_string(*dup & 0xffffffffu) + "}");
  }

  WeightedGraph g;
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : edges) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];

  // Fill with edge ids parked in `cross`, sort, then resolve positions.
  g.entries_.resize(2 * edges.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (std::size_t id = 0; id < edges.size(); ++id) {
    const Edge& e = edges[id];
    g.entries_[fill[e.u]++] = {e.v, e.w, static_cast<std::uint32_t>(id)};
    g.entries_[fill[e.v]++] = {e.u, e.w, static_cast<std::uint32_t>(id)};
    g.total_weight_ += e.w;
  }

  // position_of[2 * id + (owner is the smaller endpoint ? 0 : 1)]
  std::vector<std::uint32_t> position_of(2 * edges.size());
  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.entries_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.entries_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last, [](const AdjEntry& a, const AdjEntry& b) {
      return a.weight != b.weight ? a.weight < b.weight : a.target < b.target;
    });
    for (auto it = first; it != last; ++it) {
      const bool owner_is_low = v < it->target;
      position_of[2 * it->cross + (owner_is_low ? 0 : 1)] = static_cast<std::uint32_t>(it - first);
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t k = g.offsets_[v]; k < g.offsets_[v + 1]; ++k) {
      AdjEntry& entry = g.entries_[k];
      const bool owner_is_low = v < entry.target;
      entry.cross = position_of[2 * entry.cross + (owner_is_low ? 1 : 0)];
    }
  }

  g.max_neighbor_degree_.assign(n, 0);
  g.weighted_degree_.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    g.max_degree_ = std::max(g.max_degree_, g.degree(v));
    for (const AdjEntry& e : g.neighbors(v)) {
      g.weighted_degree_[v] += e.weight;
      g.max_neighbor_degree_[v] = std::max(g.max_neighbor_degree_[v], g.degree(e.target));
    }
  }
  return g;
}

std::vector<Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (const AdjEntry& e : neighbors(u)) {
      if (u < e.target) out.push_back({u, e.target, e.weight});
    }
  }
  std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  return out;
}

void WeightedGraph::validate() const {
  const std::size_t n = vertex_count();
  std::size_t total = 0;
  for (Vertex u = 0; u < n; ++u) {
    auto adj = neighbors(u);
    total += adj.size();
    for (std::size_t i = 0; i < adj.size(); ++i) {
      const AdjEntry& e = adj[i];
      if (e.target >= n) throw GraphError("adjacency target out of range");
      if (e.target == u) throw GraphError("self-loop at vertex " + std::to_string(u));
      if (e.weight < 0) throw GraphError("negative weight at vertex " + std::to_string(u));
      if (i > 0) {
        const AdjEntry& prev = adj[i - 1];
        if (prev.weight > e.weight || (prev.weight == e.weight && prev.target >= e.target)) {
          throw GraphError("adjacency of vertex " + std::to_string(u) + " not sorted");
        }
      }
      auto back = neighbors(e.target);
      if (e.cross >= back.size() || back[e.cross].target != u || back[e.cross].weight != e.weight ||
          back[e.cross].cross != i) {
        throw GraphError("inconsistent cross index at vertex " + std::to_string(u));
      }
    }
  }
  if (total != entries_.size() || total % 2 != 0) throw GraphError("entry count mismatch");
}

WeightedGraph generate_er(const ErdosRenyiParams& params) {
  if (!(params.p >= 0.0 && params.p <= 1.0)) throw GraphError("edge probability must lie in [0, 1]");
  if (params.wmin < 1 || params.wmin > params.wmax) throw GraphError("weights must satisfy 1 <= wmin <= wmax");

  std::mt19937_64 engine(params.seed);
  // 53 random mantissa bits -> [0, 1); p == 1 always accepts, p == 0 never does.
  auto coin = [&] { return static_cast<double>(engine() >> 11) * 0x1.0p-53 < params.p; };
  const auto range = static_cast<std::uint64_t>(params.wmax - params.wmin) + 1;
  const std::uint64_t reject_below = (0 - range) % range;
  auto weight = [&]() -> Weight {
    if (range == 1) return params.wmin;
    std::uint64_t x;
    do {
      x = engine();
    } while (x < reject_below);
    return params.wmin + static_cast<Weight>(x % range);
  };

  std::vector<Edge> edges;
  for (Vertex u = 0; u < params.n; ++u) {
    for (Vertex v = u + 1; v < params.n; ++v) {
      if (coin()) edges.push_back({u, v, weight()});
    }
  }
  return WeightedGraph::from_edges(params.n, edges);
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class Int>
Int parse_int(std::string_view tok, std::size_t line, const char* what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

WeightedGraph parse_graph(std::string_view text) {
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;
  std::unordered_map<std::uint64_t, std::size_t> seen;
  std::size_t last_line = 0;

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    last_line = lineno;

    if (!have_header) {
      if (tokens.size() != 2) throw ParseError(lineno, "header must be \"n m\"");
      n = parse_int<std::size_t>(tokens[0], lineno, "vertex count");
      m = parse_int<std::size_t>(tokens[1], lineno, "edge count");
      have_header = true;
      continue;
    }
    if (tokens.size() != 3) throw ParseError(lineno, "edge line must be \"u v w\"");
    if (edges.size() == m) throw ParseError(lineno, "more edges than announced in header");
    Edge e{parse_int<Vertex>(tokens[0], lineno, "vertex"), parse_int<Vertex>(tokens[1], lineno, "vertex"),
           parse_int<Weight>(tokens[2], lineno, "weight")};
    try {
      check_edge(n, e);
    } catch (const GraphError& err) {
      throw ParseError(lineno, err.what());
    }
    auto [it, inserted] = seen.emplace(pair_key(e.u, e.v), lineno);
    if (!inserted) throw ParseError(lineno, "duplicate edge (first seen on line " + std::to_string(it->second) + ")");
    edges.push_back(e);
  }
  if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing header");
  if (edges.size() != m) {
    throw ParseError(last_line, "header announces " + std::to_string(m) + " edges but " +
                                    std::to_string(edges.size()) + " were given");
  }
  return WeightedGraph::from_edges(n, edges);
}

std::string serialize_graph(const WeightedGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
  return out.str();
}

WeightedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

void write_graph_file(const WeightedGraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GraphError("cannot write " + path);
  out << serialize_graph(g);
  if (!out) throw GraphError("write failed for " + path);
}

}  // namespace gbp
