// Serial vs OpenMP exhaustive search, with backtracking for reference.

#include <benchmark/benchmark.h>

#include "arrowlab/arrow.hpp"
#include "arrowlab/derived.hpp"
#include "arrowlab/kernels.hpp"
#include "arrowlab/sets.hpp"

using namespace arrowlab;

namespace {

constexpr std::uint64_t kBudget = std::uint64_t{1} << 40;

Hypergraph ramsey_graph(int n) {
  const ArrowQuery q{fsi_category(), finite_set(n), finite_set(3), finite_set(2), 2, Variant::subobject};
  return build_instance(q)->graph;
}

void BM_ramsey_serial(benchmark::State& state) {
  const auto g = ramsey_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_serial(g, 2, kBudget));
}

void BM_ramsey_parallel(benchmark::State& state) {
  const auto g = ramsey_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_parallel(g, 2, kBudget));
}

void BM_ramsey_backtrack(benchmark::State& state) {
  const auto g = ramsey_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(backtrack_search(g, 2));
}

void BM_dual_serial(benchmark::State& state) {
  const auto g = dual_partition_hypergraph(static_cast<int>(state.range(0)), 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_serial(g, 2, kBudget));
}

void BM_dual_parallel(benchmark::State& state) {
  const auto g = dual_partition_hypergraph(static_cast<int>(state.range(0)), 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_parallel(g, 2, kBudget));
}

void BM_dual_backtrack(benchmark::State& state) {
  const auto g = dual_partition_hypergraph(static_cast<int>(state.range(0)), 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(backtrack_search(g, 2));
}

}  // namespace

BENCHMARK(BM_ramsey_serial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ramsey_parallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ramsey_backtrack)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dual_serial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dual_parallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dual_serial)->Name("BM_dual_serial_large")->Arg(6)->Iterations(1)->Unit(benchmark::kSecond);
BENCHMARK(BM_dual_parallel)->Name("BM_dual_parallel_large")->Arg(6)->Iterations(1)->Unit(benchmark::kSecond);
BENCHMARK(BM_dual_backtrack)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
