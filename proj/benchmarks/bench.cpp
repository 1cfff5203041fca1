#include <benchmark/benchmark.h>

#include "zel/composition.hpp"
#include "zel/involution.hpp"
#include "zel/oracle.hpp"

namespace {

using namespace zel;

void BM_MwDualSpeh(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Multisegment a = speh(n, n, HalfExp::integer(0));
  for (auto _ : state) benchmark::DoNotOptimize(mw_dual(a));
}
BENCHMARK(BM_MwDualSpeh)->DenseRange(2, 10, 2);

void BM_MwDualProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = make_params(n, n, n);
  const Multisegment a = p.lower_ms() + p.upper_ms();
  for (auto _ : state) benchmark::DoNotOptimize(mw_dual(a));
}
BENCHMARK(BM_MwDualProduct)->DenseRange(2, 8, 2);

void BM_DownClosure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = make_params(n, n, 1);
  const Multisegment top = p.lower_ms() + p.upper_ms();
  for (auto _ : state) {
    const auto closure = down_closure(top);
    state.counters["nodes"] = static_cast<double>(closure.size());
    benchmark::DoNotOptimize(closure.data());
  }
}
BENCHMARK(BM_DownClosure)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_ComposeZelevinsky(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compose_zelevinsky(n, n, n).factors.data());
}
BENCHMARK(BM_ComposeZelevinsky)->DenseRange(2, 10, 2);

void BM_ComposeLanglands(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compose_langlands(n, n, n).factors.data());
}
BENCHMARK(BM_ComposeLanglands)->DenseRange(2, 8, 2);

// Fresh cache every iteration, so the recursion on d is included.
void BM_Oracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_composition(n, n, 2).factors.data());
}
BENCHMARK(BM_Oracle)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
