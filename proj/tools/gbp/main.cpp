// gbp: generate random instances, solve bipartitioning problems exactly, and
// run benchmark campaigns. Results are printed as CSV.
//
// Exit codes: 0 success, 1 usage error, 2 input error, 3 internal failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "gbp/bench.hpp"
#include "gbp/graph.hpp"
#include "gbp/parallel.hpp"
#include "gbp/solver.hpp"

namespace {

enum Exit : int { kOk = 0, kUsage = 1, kInput = 2, kInternal = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GenerateArgs {
  std::size_t n = 0;
  double p = 0.1;
  gbp::Weight wmin = 1;
  gbp::Weight wmax = 1;
  std::uint64_t seed = 0;
  std::string out;
};

struct SolveArgs {
  std::string graph;
  std::optional<std::size_t> s0;
  std::optional<std::size_t> s1;
  bool rebalance = false;
  bool high_degree = false;
  bool doubling = false;
  bool component = false;
  std::string config;
  std::string strategy = "dfs";
  std::size_t threads = 0;
  std::optional<gbp::Weight> initial;
};

struct BenchArgs {
  std::string campaign;
  std::string out;
  std::size_t reps = 0;
};

int run_generate(const GenerateArgs& a) {
  if (!(a.p >= 0.0 && a.p <= 1.0)) throw UsageError("-p must lie in [0, 1]");
  if (a.wmin < 1 || a.wmin > a.wmax) throw UsageError("weights must satisfy 1 <= wmin <= wmax");
  const gbp::WeightedGraph g = gbp::generate_er({a.n, a.p, a.wmin, a.wmax, a.seed});
  if (a.out.empty() || a.out == "-") {
    std::cout << gbp::serialize_graph(g);
  } else {
    gbp::write_graph_file(g, a.out);
  }
  return kOk;
}

int run_solve(const SolveArgs& a) {
  const gbp::WeightedGraph g = gbp::read_graph_file(a.graph);
  const std::size_t n = g.vertex_count();
  const std::size_t s0 = a.s0.value_or(a.s1 ? n - std::min(*a.s1, n) : n / 2);
  const std::size_t s1 = a.s1.value_or(n - std::min(s0, n));
  if (s0 == 0 || s1 == 0 || s0 + s1 != n) {
    throw std::invalid_argument("sizes " + std::to_string(s0) + " + " + std::to_string(s1) +
                                " do not form a bipartition of " + std::to_string(n) + " vertices");
  }

  gbp::SolveOptions options;
  if (!a.config.empty()) {
    options.bounds = gbp::BoundConfig::parse(a.config);
  } else {
    options.bounds = {a.rebalance, a.high_degree, a.doubling, a.component};
  }
  options.strategy = gbp::parse_strategy(a.strategy);
  const std::size_t threads = a.threads > 0 ? a.threads : gbp::default_thread_count(1);

  gbp::bench::BenchRow row = gbp::bench::run_instance(g, s0, s1, options, threads, a.initial.has_value());
  if (a.initial && row.cut != *a.initial) {
    throw std::invalid_argument("--initial " + std::to_string(*a.initial) + " is not the optimum (found " +
                                std::to_string(*row.cut) + ")");
  }
  std::cout << gbp::bench::csv_header() << '\n' << gbp::bench::to_csv(row) << '\n';
  return kOk;
}

int run_bench(const BenchArgs& a) {
  std::ifstream in(a.campaign);
  if (!in) throw gbp::bench::CampaignError("cannot open " + a.campaign);
  std::ostringstream text;
  text << in.rdbuf();
  gbp::bench::Campaign campaign = gbp::bench::parse_campaign(text.str());
  if (a.reps > 0) campaign.reps = a.reps;

  if (a.out.empty() || a.out == "-") {
    gbp::bench::run_campaign(campaign, std::cout);
  } else {
    std::ofstream out(a.out);
    if (!out) throw gbp::bench::CampaignError("cannot write " + a.out);
    gbp::bench::run_campaign(campaign, out);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact size-constrained graph bipartitioning by branch and bound"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write an Erdos-Renyi random graph in edge-list format");
  generate->add_option("-n", gen.n, "Vertex count")->required();
  generate->add_option("-p", gen.p, "Edge probability");
  generate->add_option("-w,--wmin", gen.wmin, "Smallest edge weight");
  generate->add_option("-W,--wmax", gen.wmax, "Largest edge weight");
  generate->add_option("--seed", gen.seed, "Random seed");
  generate->add_option("-o,--out", gen.out, "Output file (stdout when omitted)");

  SolveArgs sol;
  auto* solve = app.add_subcommand("solve", "Solve one instance and print a CSV row");
  solve->add_option("graph", sol.graph, "Edge-list graph file")->required();
  solve->add_option("--s0", sol.s0, "Size of side 0 (default n/2)");
  solve->add_option("--s1", sol.s1, "Size of side 1 (default n - s0)");
  solve->add_flag("--rebalance", sol.rebalance, "Enable the rebalancing contribution");
  solve->add_flag("--high-degree", sol.high_degree, "Enable the high-degree contribution");
  solve->add_flag("--doubling", sol.doubling, "Enable doubling of high-degree contributions");
  solve->add_flag("--component", sol.component, "Enable the large-component contribution");
  solve->add_option("--config", sol.config, "Named configuration: trivial, rebalance, highdegree, full, or flags joined by +");
  solve->add_option("--strategy", sol.strategy, "dfs, lb or gap")->check(CLI::IsMember({"dfs", "lb", "gap"}));
  solve->add_option("--threads", sol.threads, "Worker count (default: GBP_THREADS or 1)");
  solve->add_option("--initial", sol.initial, "Known optimal value; also counts subproblems from the optimum");

  BenchArgs ben;
  auto* bench = app.add_subcommand("bench", "Run a benchmark campaign");
  bench->add_option("--campaign", ben.campaign, "Campaign description file")->required();
  bench->add_option("--out", ben.out, "CSV output file (stdout when omitted)");
  bench->add_option("--reps", ben.reps, "Repetitions per cell (overrides the campaign)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) return run_generate(gen);
    if (*solve) return run_solve(sol);
    if (*bench) return run_bench(ben);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const gbp::GraphError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const gbp::bench::CampaignError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
