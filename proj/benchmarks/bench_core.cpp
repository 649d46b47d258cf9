#include <benchmark/benchmark.h>

#include "cliffilt/bifiltration.hpp"
#include "cliffilt/constructions.hpp"
#include "cliffilt/deformation.hpp"
#include "cliffilt/graph.hpp"
#include "cliffilt/invariants.hpp"

namespace {

using namespace cliffilt;

void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(7);
  const Matrix m = rng.matrix(n, n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

void BM_CheckSupermodule(benchmark::State& state) {
  const ModulePtr m = exterior_module(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_supermodule(*m));
}
BENCHMARK(BM_CheckSupermodule)->DenseRange(2, 6, 2);

void BM_DeformRoundTrip(benchmark::State& state) {
  const SuperFiltration f = hodge_filtration();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_roundtrip_iso(f));
}
BENCHMARK(BM_DeformRoundTrip);

void BM_DecomposeHodge(benchmark::State& state) {
  const SuperFiltration f = hodge_filtration();
  for (auto _ : state) benchmark::DoNotOptimize(decompose(f));
}
BENCHMARK(BM_DecomposeHodge);

void BM_EnumerateHeights(benchmark::State& state) {
  const SuperFiltration f = degree_filtration(static_cast<std::size_t>(state.range(0)));
  const AdinkraGraph g = to_graph(f);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_heights(f.module_ptr(), g, 1000000));
}
BENCHMARK(BM_EnumerateHeights)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_BifilteredRoundTrip(benchmark::State& state) {
  Rng rng(3);
  const Bifiltration f = random_bifiltration(2, 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(bifiltered_roundtrip(f));
}
BENCHMARK(BM_BifilteredRoundTrip)->Unit(benchmark::kMillisecond);

void BM_SearchCl5(benchmark::State& state) {
  const ModulePtr m = irreducible_cl5();
  for (auto _ : state) {
    Rng rng(1);
    benchmark::DoNotOptimize(filtration_search(m, {2, 8, 6}, 100, rng));
  }
}
BENCHMARK(BM_SearchCl5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
