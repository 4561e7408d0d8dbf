#include "gbp/bench.hpp"

#include <charconv>
#include <iomanip>
#include <iostream>
#include <locale>
#include <sstream>

#include "gbp/graph.hpp"
#include "gbp/parallel.hpp"

namespace gbp::bench {

std::string csv_header() {
  return "n,p,wmax,seed,config,strategy,threads,time_total,cut,solutions_found,subproblems_explored,"
         "irrelevant_tasks,time_to_optimum,subproblems_with_optimal_initial";
}

std::string to_csv(const BenchRow& row) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  auto opt = [&](const auto& value) {
    if (value) out << *value;
  };
  auto seconds = [&](double s) { out << std::fixed << std::setprecision(6) << s << std::defaultfloat; };

  out << row.n << ',';
  if (row.p) out << std::setprecision(6) << *row.p;
  out << ',';
  opt(row.wmax);
  out << ',';
  opt(row.seed);
  out << ',' << row.config << ',' << row.strategy << ',' << row.threads << ',';
  if (row.error) {
    out << ",,,,,,";
    return out.str();
  }
  seconds(row.time_total);
  out << ',';
  opt(row.cut);
  out << ',' << row.solutions_found << ',' << row.subproblems_explored << ',' << row.irrelevant_tasks << ',';
  seconds(row.time_to_optimum);
  out << ',';
  opt(row.subproblems_with_optimal_initial);
  return out.str();
}

BenchRow make_row(const SolveResult& result, std::size_t n) {
  BenchRow row;
  row.n = n;
  row.config = result.bounds.name();
  row.strategy = to_string(result.strategy);
  row.threads = result.threads;
  row.time_total = result.time_total;
  row.cut = result.best.value;
  row.solutions_found = result.solutions_found;
  row.subproblems_explored = result.subproblems_explored;
  row.irrelevant_tasks = result.irrelevant_tasks;
  row.time_to_optimum = result.time_to_optimum;
  return row;
}

namespace {

SolveResult solve(const WeightedGraph& g, std::size_t s0, std::size_t s1, const SolveOptions& options,
                  std::size_t threads) {
  return threads == 1 ? solve_sequential(g, s0, s1, options) : solve_parallel(g, s0, s1, options, threads);
}

}  // namespace

BenchRow run_instance(const WeightedGraph& g, std::size_t s0, std::size_t s1, const SolveOptions& options,
                      std::size_t threads, bool optimal_initial) {
  const SolveResult result = solve(g, s0, s1, options, threads);
  BenchRow row = make_row(result, g.vertex_count());
  if (optimal_initial) {
    SolveOptions pinned = options;
    pinned.initial = result.best;
    row.subproblems_with_optimal_initial = solve(g, s0, s1, pinned, threads).subproblems_explored;
  }
  return row;
}

std::size_t Campaign::cell_count() const noexcept {
  return n.size() * p.size() * wmax.size() * seeds.size() * configs.size() * strategies.size() * threads.size();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_list(std::string_view value) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= value.size()) {
    std::size_t end = value.find(',', pos);
    if (end == std::string_view::npos) end = value.size();
    auto item = trim(value.substr(pos, end - pos));
    if (!item.empty()) out.emplace_back(item);
    pos = end + 1;
  }
  return out;
}

template <class Int>
Int to_int(std::string_view s, std::size_t line) {
  Int v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw CampaignError("line " + std::to_string(line) + ": invalid integer '" + std::string(s) + "'");
  }
  return v;
}

template <class Int>
std::vector<Int> int_list(std::string_view value, std::size_t line) {
  std::vector<Int> out;
  for (const std::string& item : split_list(value)) {
    if (auto dash = item.find('-'); dash != std::string::npos && dash > 0) {
      const Int lo = to_int<Int>(trim(std::string_view(item).substr(0, dash)), line);
      const Int hi = to_int<Int>(trim(std::string_view(item).substr(dash + 1)), line);
      if (hi < lo) throw CampaignError("line " + std::to_string(line) + ": empty range '" + item + "'");
      for (Int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(to_int<Int>(item, line));
    }
  }
  if (out.empty()) throw CampaignError("line " + std::to_string(line) + ": empty list");
  return out;
}

double to_double(const std::string& s, std::size_t line) {
  std::istringstream in(s);
  in.imbue(std::locale::classic());
  double v = 0;
  if (!(in >> v) || !in.eof()) throw CampaignError("line " + std::to_string(line) + ": invalid number '" + s + "'");
  return v;
}

}  // namespace

Campaign parse_campaign(std::string_view text) {
  Campaign c;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw CampaignError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    const std::string where = "line " + std::to_string(lineno) + ": ";
    try {
      if (key == "n") {
        c.n = int_list<std::size_t>(value, lineno);
      } else if (key == "p") {
        c.p.clear();
        for (const auto& item : split_list(value)) c.p.push_back(to_double(item, lineno));
      } else if (key == "wmin") {
        c.wmin = to_int<Weight>(value, lineno);
      } else if (key == "wmax") {
        c.wmax = int_list<Weight>(value, lineno);
      } else if (key == "seeds") {
        c.seeds = int_list<std::uint64_t>(value, lineno);
      } else if (key == "configs") {
        c.configs.clear();
        for (const auto& item : split_list(value)) c.configs.push_back(BoundConfig::parse(item));
      } else if (key == "strategies") {
        c.strategies.clear();
        for (const auto& item : split_list(value)) c.strategies.push_back(parse_strategy(item));
      } else if (key == "threads") {
        c.threads = int_list<std::size_t>(value, lineno);
      } else if (key == "reps") {
        c.reps = to_int<std::size_t>(value, lineno);
      } else if (key == "optimal_initial") {
        if (value == "true" || value == "1") {
          c.optimal_initial = true;
        } else if (value == "false" || value == "0") {
          c.optimal_initial = false;
        } else {
          throw CampaignError(where + "optimal_initial must be true or false");
        }
      } else {
        throw CampaignError(where + "unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw CampaignError(where + e.what());
    }
  }
  if (c.n.empty()) throw CampaignError("campaign does not list any vertex count (key n)");
  if (c.p.empty() || c.configs.empty() || c.strategies.empty()) throw CampaignError("campaign has an empty list");
  if (c.reps == 0) throw CampaignError("reps must be at least 1");
  for (std::size_t t : c.threads) {
    if (t == 0) throw CampaignError("thread counts must be at least 1");
  }
  return c;
}

std::vector<BenchRow> run_campaign(const Campaign& c, std::ostream& out) {
  std::vector<BenchRow> rows;
  out << csv_header() << '\n';
  for (std::size_t n : c.n) {
    for (double p : c.p) {
      for (Weight wmax : c.wmax) {
        for (std::uint64_t seed : c.seeds) {
          WeightedGraph g;
          std::optional<std::string> instance_error;
          try {
            g = generate_er({n, p, c.wmin, wmax, seed});
          } catch (const std::exception& e) {
            instance_error = e.what();
          }
          const std::size_t s0 = n / 2;
          const std::size_t s1 = n - s0;
          for (const BoundConfig& cfg : c.configs) {
            for (SearchStrategy strategy : c.strategies) {
              for (std::size_t threads : c.threads) {
                BenchRow row;
                try {
                  if (instance_error) throw std::runtime_error(*instance_error);
                  SolveOptions options{cfg, strategy, std::nullopt};
                  row = run_instance(g, s0, s1, options, threads, c.optimal_initial);
                  double total = row.time_total;
                  double to_opt = row.time_to_optimum;
                  for (std::size_t r = 1; r < c.reps; ++r) {
                    const BenchRow again = run_instance(g, s0, s1, options, threads, false);
                    total += again.time_total;
                    to_opt += again.time_to_optimum;
                  }
                  row.time_total = total / static_cast<double>(c.reps);
                  row.time_to_optimum = to_opt / static_cast<double>(c.reps);
                } catch (const std::exception& e) {
                  row = BenchRow{};
                  row.n = n;
                  row.config = cfg.name();
                  row.strategy = to_string(strategy);
                  row.threads = threads;
                  row.error = e.what();
                  std::cerr << "cell n=" << n << " p=" << p << " wmax=" << wmax << " seed=" << seed
                            << " config=" << row.config << " failed: " << e.what() << '\n';
                }
                row.p = p;
                row.wmax = wmax;
                row.seed = seed;
                out << to_csv(row) << '\n' << std::flush;
                rows.push_back(std::move(row));
              }
            }
          }
        }
      }
    }
  }
  return rows;
}

}  // namespace gbp::bench
