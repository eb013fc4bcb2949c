#include <benchmark/benchmark.h>

#include "cyclecone/classes.hpp"
#include "cyclecone/cones.hpp"
#include "cyclecone/lattice.hpp"
#include "cyclecone/qseries.hpp"

using namespace cyclecone;

static void BM_Eisenstein(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eisenstein(18, n));
}
BENCHMARK(BM_Eisenstein)->Arg(100)->Arg(400)->Arg(1600);

static void BM_MillerBasis(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(miller_basis(k, 201));
}
BENCHMARK(BM_MillerBasis)->Arg(12)->Arg(34)->Arg(60)->Unit(benchmark::kMillisecond);

static void BM_PrimitiveIdentityScan(benchmark::State& state) {
  const QSeries e = eisenstein(10, 201);
  for (auto _ : state) {
    for (std::uint64_t m = 1; m <= 200; ++m) benchmark::DoNotOptimize(primitive_eisenstein_identity(m, 18, e));
  }
}
BENCHMARK(BM_PrimitiveIdentityScan)->Unit(benchmark::kMillisecond);

static void BM_ConvergenceScan(benchmark::State& state) {
  const MillerBasis b = miller_basis(18, 201);
  std::vector<std::uint64_t> ms;
  for (std::uint64_t m = 1; m <= 200; ++m) ms.push_back(m);
  for (auto _ : state) benchmark::DoNotOptimize(convergence_scan(b, ms, true));
}
BENCHMARK(BM_ConvergenceScan)->Unit(benchmark::kMillisecond);

static void BM_IsPointed(benchmark::State& state) {
  const Cone c = accumulation_cone_model(miller_basis(34, 201), static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_pointed(c));
}
BENCHMARK(BM_IsPointed)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_ExtremalGenerators(benchmark::State& state) {
  const Cone c = accumulation_cone_model(miller_basis(18, 201), static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(extremal_generators(c));
}
BENCHMARK(BM_ExtremalGenerators)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_GaussReduce(benchmark::State& state) {
  const HalfIntegralMatrix t(IntMatrix::from_rows({{2 * 1009, 2017}, {2017, 2 * 1013}}));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_reduce(t));
}
BENCHMARK(BM_GaussReduce);
BENCHMARK_MAIN();
