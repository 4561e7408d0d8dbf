#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gbp/subproblem.hpp"
#include "gbp/types.hpp"

namespace gbp {

/// Which lower-bound contributions are active. The basic bound is always on.
struct BoundConfig {
  bool rebalance = false;
  bool high_degree = false;
  bool hd_doubling = false;
  bool component = false;

  static constexpr BoundConfig trivial() { return {}; }
  static constexpr BoundConfig with_rebalance() { return {true, false, false, false}; }
  static constexpr BoundConfig with_high_degree() { return {true, true, true, false}; }
  static constexpr BoundConfig full() { return {true, true, true, true}; }

  /// "trivial", "rebalance", "highdegree" (rebalance, hd and doubling),
  /// "full", or a '+'-joined flag list such as "rebalance+component".
  std::string name() const;
  /// Accepts the names produced by name(). Throws std::invalid_argument.
  static BoundConfig parse(const std::string& name);

  bool operator==(const BoundConfig&) const = default;
};

/// sum over free v of min(D0[v], D1[v]).
Weight basic_bound(const Subproblem& sp);

struct RebalanceResult {
  Weight value = 0;
  /// Free vertices in delta order; the first f0 go to side 0, the rest to 1.
  std::vector<Vertex> order;
  std::size_t split = 0;
};

/// Rebalancing contribution R on top of basic_bound. basic + R equals the
/// minimum fixed-free crossing weight over all completions.
RebalanceResult rebalance_bound(const Subproblem& sp);

struct HighDegreeResult {
  HalfWeight degree;     ///< sum of T_big(v), doubled where permitted
  HalfWeight rebalance;  ///< smallest (h - f_big) penalties T_small - T_big
  std::size_t high_degree_vertices = 0;
};

/// Free-free lower bound from vertices whose free degree exceeds the larger
/// remaining side. Reads the maintained seen counters and lowers the
/// subproblem's max-free-degree estimate when it runs. Returns zeros without
/// work when that estimate rules the bound out.
HighDegreeResult high_degree_contribution(Subproblem& sp, bool doubling);

HalfWeight high_degree_bound(Subproblem& sp, bool doubling = false);
HalfWeight high_degree_rebalance(Subproblem& sp, bool doubling = false);

/// Lightest edge of a free component with more vertices than the larger
/// remaining side, or 0. Refreshes the component-size and adjacent-degree
/// estimates when it traverses.
Weight component_bound(Subproblem& sp);

Weight lower_bound(Subproblem& sp, const BoundConfig& cfg);

}  // namespace gbp
