#include <benchmark/benchmark.h>

#include "metacov/knot_io.hpp"
#include "metacov/lowindex.hpp"

using namespace metacov;

static void BM_LowIndexSubgroups(benchmark::State& state) {
  const GroupPresentation s = simplify(wirtinger(builtin_knot("4_1")));
  const auto index = static_cast<std::size_t>(state.range(0));
  std::size_t classes = 0;
  for (auto _ : state) {
    classes = low_index_subgroups(s, index).size();
    benchmark::DoNotOptimize(classes);
  }
  state.counters["classes"] = static_cast<double>(classes);
}
BENCHMARK(BM_LowIndexSubgroups)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_MinimalDegree(benchmark::State& state) {
  const GroupPresentation s = simplify(wirtinger(builtin_knot("7_7")));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_noncyclic_degree(s, 8));
}
BENCHMARK(BM_MinimalDegree)->Unit(benchmark::kMillisecond);
