#include <benchmark/benchmark.h>

#include "wsmt/heuristic.hpp"
#include "wsmt/instance.hpp"
#include "wsmt/oracle.hpp"
#include "wsmt/wmst.hpp"

namespace {

std::vector<wsmt::WeightedVertex> instance(int n, std::uint64_t seed) {
  return wsmt::generate_random_instance(n, 1, 9, seed).terminals;
}

void BM_WeightedMst(benchmark::State& state) {
  const auto terminals = instance(static_cast<int>(state.range(0)), 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wsmt::weighted_mst(terminals));
  }
}
BENCHMARK(BM_WeightedMst)->Arg(20)->Arg(50)->Arg(100);

void BM_PlaneWeightedMst(benchmark::State& state) {
  const auto terminals = instance(static_cast<int>(state.range(0)), 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wsmt::plane_weighted_mst(terminals));
  }
}
BENCHMARK(BM_PlaneWeightedMst)->Arg(20)->Arg(50);

void BM_Solve(benchmark::State& state) {
  const auto terminals = instance(static_cast<int>(state.range(0)), 29);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wsmt::solve(terminals));
  }
}
BENCHMARK(BM_Solve)->Arg(10)->Arg(20)->Arg(40);

void BM_FermatPoint(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(wsmt::fermat_point({0, 0}, {4, 0}, {1, 2}));
  }
}
BENCHMARK(BM_FermatPoint);

void BM_Oracle(benchmark::State& state) {
  const auto terminals = instance(static_cast<int>(state.range(0)), 41);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wsmt::oracle_wsmt(terminals));
  }
}
BENCHMARK(BM_Oracle)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
