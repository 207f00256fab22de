#include <benchmark/benchmark.h>

#include "mcx/complex.hpp"
#include "mcx/formulas.hpp"
#include "mcx/graph.hpp"
#include "mcx/homology.hpp"
#include "mcx/mta.hpp"

using namespace mcx;

namespace {

void BM_HomologyCycle(benchmark::State& state) {
  SimplicialComplex k = matching_complex(generate(spec::Cycle{static_cast<int>(state.range(0))}));
  for (auto _ : state) benchmark::DoNotOptimize(reduced_homology(k));
  state.counters["faces"] = static_cast<double>(k.face_count());
}
BENCHMARK(BM_HomologyCycle)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_HomologyBinaryTree3(benchmark::State& state) {
  Graph g = generate(spec::PerfectBinaryTree{3});
  for (auto _ : state) benchmark::DoNotOptimize(reduced_homology(matching_complex(g)));
}
BENCHMARK(BM_HomologyBinaryTree3)->Unit(benchmark::kMillisecond);

void BM_MtaHoneycomb21(benchmark::State& state) {
  Graph l = line_graph(generate(spec::Honeycomb{2, 1, static_cast<int>(state.range(0))}));
  StrategyPtr s = honeycomb21_strategy();
  for (auto _ : state) benchmark::DoNotOptimize(critical_cells(run_mta(l, *s)));
}
BENCHMARK(BM_MtaHoneycomb21)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_MtaPolygonLine(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), t = static_cast<int>(state.range(1));
  Graph l = line_graph(generate(spec::PolygonLine{n, t}));
  StrategyPtr s = smallest_aj_strategy_for(n, t);
  for (auto _ : state) benchmark::DoNotOptimize(critical_cells(run_mta(l, *s)));
}
BENCHMARK(BM_MtaPolygonLine)->Args({3, 3})->Args({4, 3})->Args({5, 4})->Unit(benchmark::kMillisecond);

void BM_ArbitraryCaterpillar(benchmark::State& state) {
  std::vector<int> legs(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < legs.size(); ++i) legs[i] = static_cast<int>((i * 7 + 3) % 5);
  legs[0] = std::max(legs[0], 1);
  for (auto _ : state) benchmark::DoNotOptimize(arbitrary_caterpillar_wedge(legs));
}
BENCHMARK(BM_ArbitraryCaterpillar)->Arg(5)->Arg(10)->Arg(20);

void BM_CaterpillarOracle(benchmark::State& state) {
  Graph g = generate(spec::Caterpillar{{3, 3, 3, 3, 3}});
  for (auto _ : state) benchmark::DoNotOptimize(reduced_homology(matching_complex(g)));
}
BENCHMARK(BM_CaterpillarOracle)->Unit(benchmark::kMillisecond);

// Stretch instances; run with --benchmark_filter=Big.
void BM_BigBinaryTree4(benchmark::State& state) {
  Graph g = generate(spec::PerfectBinaryTree{4});
  for (auto _ : state) benchmark::DoNotOptimize(reduced_homology(matching_complex(g, 400'000'000)));
}
BENCHMARK(BM_BigBinaryTree4)->Unit(benchmark::kSecond)->Iterations(1);

void BM_BigHoneycomb321(benchmark::State& state) {
  Graph g = generate(spec::Honeycomb{3, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(reduced_homology(matching_complex(g, 400'000'000)));
}
BENCHMARK(BM_BigHoneycomb321)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
