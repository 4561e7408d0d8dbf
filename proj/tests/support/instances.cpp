#include "instances.hpp"

#include <algorithm>

namespace gbp::testing {

std::vector<Instance> oracle_corpus() {
  std::vector<Instance> out;
  for (std::size_t n = 4; n <= 14; ++n) {
    for (double p : {0.1, 0.5, 1.0}) {
      for (Weight wmax : {Weight{1}, Weight{1000}}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
          const WeightedGraph g = generate_er({n, p, 1, wmax, seed});
          for (std::size_t s0 : {n / 2, std::max<std::size_t>(1, n / 3)}) {
            Instance inst{g, s0, n - s0, {}};
            inst.label = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " wmax=" + std::to_string(wmax) +
                         " seed=" + std::to_string(seed) + " s0=" + std::to_string(s0);
            out.push_back(std::move(inst));
          }
        }
      }
    }
  }
  return out;
}

Instance random_instance(std::mt19937_64& rng, std::size_t n_min, std::size_t n_max) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(n_min, n_max)(rng);
  static constexpr double kDensities[] = {0.0, 0.1, 0.3, 0.5, 0.8, 1.0};
  const double p = kDensities[rng() % std::size(kDensities)];
  const Weight wmax = rng() % 2 == 0 ? 1 : 1000;
  const std::uint64_t seed = rng();
  const std::size_t s0 = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
  Instance inst{generate_er({n, p, 1, wmax, seed}), s0, n - s0, {}};
  inst.label = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " wmax=" + std::to_string(wmax) +
               " seed=" + std::to_string(seed) + " s0=" + std::to_string(s0);
  return inst;
}

std::vector<std::int8_t> random_sides(std::mt19937_64& rng, std::size_t n, std::size_t s0, std::size_t s1) {
  std::vector<std::int8_t> sides(n, -1);
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t u0 = std::uniform_int_distribution<std::size_t>(0, s0)(rng);
  const std::size_t u1 = std::uniform_int_distribution<std::size_t>(0, s1)(rng);
  for (std::size_t i = 0; i < u0; ++i) sides[order[i]] = 0;
  for (std::size_t i = 0; i < u1; ++i) sides[order[u0 + i]] = 1;
  return sides;
}

Subproblem random_descendant(const WeightedGraph& g, std::size_t s0, std::size_t s1, std::mt19937_64& rng,
                             std::size_t steps, bool track_high_degree) {
  Subproblem sp = Subproblem::root(g, s0, s1, track_high_degree);
  for (std::size_t k = 0; k < steps && sp.free_count() > 0; ++k) {
    if (sp.remaining(kSide0) == 0 || sp.remaining(kSide1) == 0) break;
    const auto free = sp.free_vertices();
    const Vertex v = free[rng() % free.size()];
    sp = sp.assign(v, rng() % 2 == 0 ? kSide0 : kSide1);
  }
  return sp;
}

std::string describe(const Instance& inst) { return inst.label; }

}  // namespace gbp::testing
