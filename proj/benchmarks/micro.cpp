#include <benchmark/benchmark.h>

#include <random>

#include "gbp/bounds.hpp"
#include "gbp/parallel.hpp"
#include "gbp/solver.hpp"

namespace {

using namespace gbp;

// One root-to-leaf branching path per iteration.
void BM_AssignPath(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = generate_er({n, 0.3, 1, 1000, 1});
  for (auto _ : state) {
    Subproblem sp = Subproblem::root(g, n / 2, n - n / 2);
    while (sp.remaining(kSide0) > 0 && sp.remaining(kSide1) > 0) {
      const Vertex v = branch_vertex(sp);
      sp = sp.assign(v, sp.depth() % 2 == 0 ? kSide0 : kSide1);
    }
    benchmark::DoNotOptimize(sp.fixed_cut());
  }
}
BENCHMARK(BM_AssignPath)->Arg(40)->Arg(80)->Arg(160);

void BM_LowerBound(benchmark::State& state) {
  const BoundConfig configs[] = {BoundConfig::trivial(), BoundConfig::with_rebalance(), BoundConfig::with_high_degree(),
                                 BoundConfig::full()};
  const BoundConfig cfg = configs[state.range(0)];
  const auto g = generate_er({60, 0.5, 1, 1000, 2});
  std::mt19937_64 rng(3);
  Subproblem sp = Subproblem::root(g, 30, 30);
  for (int k = 0; k < 15; ++k) {
    const auto free = sp.free_vertices();
    sp = sp.assign(free[rng() % free.size()], k % 2 == 0 ? kSide0 : kSide1);
  }
  for (auto _ : state) {
    Subproblem copy = sp;
    benchmark::DoNotOptimize(lower_bound(copy, cfg));
  }
  state.SetLabel(cfg.name());
}
BENCHMARK(BM_LowerBound)->DenseRange(0, 3);

void BM_SolveSparse(benchmark::State& state) {
  const auto g = generate_er({36, 0.1, 1, 1000, 0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_sequential(g, 18, 18, {}).best.value);
  }
}
BENCHMARK(BM_SolveSparse)->Unit(benchmark::kMillisecond);

void BM_SolveParallel(benchmark::State& state) {
  const auto g = generate_er({30, 0.3, 1, 1000, 4});
  const auto threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_parallel(g, 15, 15, {}, threads).best.value);
  }
}
BENCHMARK(BM_SolveParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_IncumbentUpdate(benchmark::State& state) {
  Incumbent inc(Solution{{}, std::numeric_limits<Weight>::max()});
  Weight v = std::numeric_limits<Weight>::max();
  for (auto _ : state) benchmark::DoNotOptimize(inc.update(Solution{{}, --v}));
}
BENCHMARK(BM_IncumbentUpdate);

}  // namespace

BENCHMARK_MAIN();
