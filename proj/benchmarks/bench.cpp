#include <benchmark/benchmark.h>

#include "dzid/identities.hpp"
#include "dzid/intersection.hpp"

using namespace dzid;

static void BM_SolveKdV(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::vector<KdVFreeEnergy> table;
    for (int h = 1; h <= g; ++h) table.push_back(solve_kdv_loop(h, table));
    benchmark::DoNotOptimize(table.back().coeffs.size());
  }
}
BENCHMARK(BM_SolveKdV)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_IntersectionNumbers(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) {
    IntersectionOracle oracle;
    Rational total;
    for (const Partition& mu : all_partitions(g)) total += oracle(g, mu);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_IntersectionNumbers)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_TreeOperator(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const FrobeniusModel pt = FrobeniusModel::point();
  for (auto _ : state) {
    Genus0 g0(pt);
    OperatorEngine ops(g0);
    bool ok = true;
    for (const Partition& mu : all_partitions(g)) ok &= check_universal(ops, g, mu, std::vector<int>(mu.size(), 1)).equal;
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_TreeOperator)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

static void BM_GenusOneA3(benchmark::State& state) {
  const FrobeniusModel a3 = FrobeniusModel::a3();
  for (auto _ : state) {
    Genus0 g0(a3);
    OperatorEngine ops(g0);
    benchmark::DoNotOptimize(check_genus1(ops, 1, static_cast<int>(state.range(0))).equal);
  }
}
BENCHMARK(BM_GenusOneA3)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
