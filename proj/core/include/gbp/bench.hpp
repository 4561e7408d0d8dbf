#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gbp/bounds.hpp"
#include "gbp/solver.hpp"

namespace gbp::bench {

class CampaignError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One CSV row. Instance parameters are empty for graphs read from a file.
struct BenchRow {
  std::size_t n = 0;
  std::optional<double> p;
  std::optional<Weight> wmax;
  std::optional<std::uint64_t> seed;
  std::string config;
  std::string strategy;
  std::size_t threads = 1;
  double time_total = 0.0;
  std::optional<Weight> cut;
  std::uint64_t solutions_found = 0;
  std::uint64_t subproblems_explored = 0;
  std::uint64_t irrelevant_tasks = 0;
  double time_to_optimum = 0.0;
  std::optional<std::uint64_t> subproblems_with_optimal_initial;
  /// Set when the run failed; metric columns are then left empty.
  std::optional<std::string> error;
};

std::string csv_header();
/// Locale-independent, '.' decimal separator.
std::string to_csv(const BenchRow& row);

BenchRow make_row(const SolveResult& result, std::size_t n);

/// Runs one solve; threads == 1 selects the sequential engine. With
/// `optimal_initial` the instance is solved a second time starting from the
/// optimum found, and that run's explored count fills the extra column.
BenchRow run_instance(const WeightedGraph& g, std::size_t s0, std::size_t s1, const SolveOptions& options,
                      std::size_t threads, bool optimal_initial);

/// Experiment matrix. Plain "key = value" lines; lists are comma separated
/// and integer lists accept ranges such as "0-4". '#' starts a comment.
///
///   n = 20, 30
///   p = 1.0
///   wmin = 1
///   wmax = 1, 1000
///   seeds = 0-4
///   configs = trivial, rebalance, highdegree, full
///   strategies = dfs
///   threads = 1
///   reps = 1
///   optimal_initial = false
///
/// Target sizes are n/2 (rounded down) and the remainder.
struct Campaign {
  std::vector<std::size_t> n;
  std::vector<double> p{0.1};
  Weight wmin = 1;
  std::vector<Weight> wmax{1};
  std::vector<std::uint64_t> seeds{0};
  std::vector<BoundConfig> configs{BoundConfig::full()};
  std::vector<SearchStrategy> strategies{SearchStrategy::dfs};
  std::vector<std::size_t> threads{1};
  std::size_t reps = 1;
  bool optimal_initial = false;

  std::size_t cell_count() const noexcept;
};

Campaign parse_campaign(std::string_view text);

/// Runs every cell, writing the header and one row per cell to `out`.
/// Repetitions report mean times; counts come from the first repetition.
/// A failed cell yields a row with its error and the campaign continues.
/// Returns the rows in output order.
std::vector<BenchRow> run_campaign(const Campaign& campaign, std::ostream& out);

}  // namespace gbp::bench
