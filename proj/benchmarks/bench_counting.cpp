#include "affino/chromatic.hpp"
#include "affino/families.hpp"
#include "affino/flats.hpp"
#include "affino/geometry.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace affino;

// Shi graph [0,1]K_n; state.range(0) is n.
void BM_EnumerateFlatsShi(benchmark::State& state) {
  const auto g = interval_complete_graph(static_cast<int>(state.range(0)), 0, 1);
  for (auto _ : state) {
    auto lat = enumerate_flats(g);
    benchmark::DoNotOptimize(lat.size());
  }
}
BENCHMARK(BM_EnumerateFlatsShi)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_IntegralTermsShi(benchmark::State& state) {
  const auto rooted = rooting(interval_complete_graph(static_cast<int>(state.range(0)), 0, 1));
  for (auto _ : state) {
    auto terms = integral_terms(rooted);
    benchmark::DoNotOptimize(terms.terms.size());
  }
}
BENCHMARK(BM_IntegralTermsShi)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_DeletionContraction(benchmark::State& state) {
  const auto rooted = rooting(interval_complete_graph(static_cast<int>(state.range(0)), 0, 2));
  for (auto _ : state) {
    auto count = integral_chromatic_dc(rooted, 20);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_DeletionContraction)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_ModularChromatic(benchmark::State& state) {
  const auto g = interval_complete_graph(4, -1, 2);
  for (auto _ : state) {
    auto count = modular_chromatic(g, state.range(0));
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_ModularChromatic)->Arg(2)->Arg(3)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_OracleIntegral(benchmark::State& state) {
  const auto g = interval_complete_graph(4, 0, 1);
  for (auto _ : state) {
    auto count = oracle_integral(g, state.range(0));
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0) * state.range(0) * state.range(0));
}
BENCHMARK(BM_OracleIntegral)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
