// Serial reference vs OpenMP corpus kernels.
//
//   ./unswitch_bench --benchmark_filter=EdgeSubset
//   OMP_NUM_THREADS=8 ./unswitch_bench

#include <benchmark/benchmark.h>
#include <omp.h>

#include "corpus_kernels.hpp"
#include "unswitch/oracle.hpp"

namespace {

using namespace unswitch::oracle;

void BM_EdgeSubsetSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(detail::edge_subset_codes_serial(n));
}

void BM_EdgeSubsetOmp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(detail::edge_subset_codes_omp(n));
  state.counters["threads"] = omp_get_max_threads();
}

std::vector<Code> order_six() { return detail::edge_subset_codes_omp(6); }

void BM_ExtensionSerial(benchmark::State& state) {
  const auto base = order_six();
  for (auto _ : state) benchmark::DoNotOptimize(detail::extension_codes_serial(6, base));
}

void BM_ExtensionOmp(benchmark::State& state) {
  const auto base = order_six();
  for (auto _ : state) benchmark::DoNotOptimize(detail::extension_codes_omp(6, base));
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_EdgeSubsetSerial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EdgeSubsetOmp)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtensionSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtensionOmp)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
