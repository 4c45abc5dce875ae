#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "metacov/covers.hpp"
#include "metacov/fox.hpp"
#include "metacov/knot_io.hpp"
#include "metacov/smith.hpp"

using namespace metacov;

namespace {

const GroupPresentation& simplified(const std::string& name) {
  static std::map<std::string, GroupPresentation> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, simplify(wirtinger(builtin_knot(name)))).first;
  return it->second;
}

AffineRep rep_for(const std::string& knot, std::uint32_t p) {
  const GroupPresentation& s = simplified(knot);
  return build_rep(s, p, roots_of_delta_modp(alexander_modp(s, p).delta).front().factor);
}

}  // namespace

static void BM_AlexanderPolynomial(benchmark::State& state) {
  const GroupPresentation w = wirtinger(builtin_knot("7_7"));
  for (auto _ : state) benchmark::DoNotOptimize(alexander_poly(w));
}
BENCHMARK(BM_AlexanderPolynomial);

static void BM_ReidemeisterSchreier(benchmark::State& state) {
  const GroupPresentation& s = simplified("5_2");
  const SchreierSystem sys(kernel_table(rep_for("5_2", 13)));
  for (auto _ : state) benchmark::DoNotOptimize(rs_presentation(s, sys));
  state.counters["degree"] = static_cast<double>(sys.table().degree());
}
BENCHMARK(BM_ReidemeisterSchreier)->Unit(benchmark::kMillisecond);

// Kernel cover H1 by sparse Smith normal form; argument selects the prime.
static void BM_KernelCoverHomology(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const GroupPresentation& s = simplified("4_1");
  const AffineRep rep = rep_for("4_1", p);
  const CosetTable table = kernel_table(rep);
  const Budget budget{5000, 40'000'000};
  for (auto _ : state)
    benchmark::DoNotOptimize(cover_homology(s, table, CoverKind::kernel, budget, false));
  state.counters["degree"] = static_cast<double>(table.degree());
}
BENCHMARK(BM_KernelCoverHomology)->Arg(3)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_SmithDense(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> entry(-9, 9);
  Matrix<Integer> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(snf_int(m));
}
BENCHMARK(BM_SmithDense)->RangeMultiplier(2)->Range(8, 64);
