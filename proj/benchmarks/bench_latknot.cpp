#include <benchmark/benchmark.h>

#include "latknot/distortion.hpp"
#include "latknot/explorer.hpp"
#include "latknot/oracle.hpp"
#include "latknot/torus.hpp"

namespace {

using namespace latknot;

void BM_BuildTorus(benchmark::State& state) {
  const auto tab = generate_torus_tabulation(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_knot(tab));
}
BENCHMARK(BM_BuildTorus)->Arg(2)->Arg(10)->Arg(22);

void BM_DistortionScan(benchmark::State& state) {
  const LatticeKnot k = build_knot(generate_torus_tabulation(static_cast<int>(state.range(0))));
  const ScanOptions options{static_cast<unsigned>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(vertex_distortion(k, options));
  state.counters["pairs"] = static_cast<double>(k.edge_length() * (k.edge_length() - 1) / 2);
}
BENCHMARK(BM_DistortionScan)->Args({10, 1})->Args({22, 1})->Args({22, 4})->Unit(benchmark::kMillisecond);

void BM_OracleScan(benchmark::State& state) {
  const LatticeKnot k = build_knot(generate_torus_tabulation(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_vertex_distortion(k));
}
BENCHMARK(BM_OracleScan)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(conformation_counts(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Enumerate)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
