// Serial references against the OpenMP kernels.

#include <random>

#include <benchmark/benchmark.h>

#include "speccert/generators.hpp"
#include "speccert/oracle.hpp"
#include "speccert/perturb.hpp"
#include "speccert/rounding.hpp"
#include "speccert/spectrum.hpp"

using namespace speccert;

namespace {

WeightedGraph oracle_graph(int n) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Matrix w = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (u(rng) < 0.5) w(i, j) = w(j, i) = u(rng);
  return WeightedGraph(w);
}

void BM_OracleParallel(benchmark::State& state) {
  const auto g = oracle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(min_ratio_cut_bruteforce(g, 3).value);
}

void BM_OracleSerial(benchmark::State& state) {
  const auto g = oracle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::min_ratio_cut_bruteforce(g, 3).value);
}

void BM_GapExactParallel(benchmark::State& state) {
  const auto g = path_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gap_exact_detail(g).value);
}

void BM_GapExactSerial(benchmark::State& state) {
  const auto g = path_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::gap_exact_detail(g).value);
}

Matrix kmeans_points() {
  static const Matrix u = eigenmap(gen_planted_blocks({40, 60, 100}, 1.0, 0.05).graph, 3).U;
  return u;
}

void BM_KmeansParallel(benchmark::State& state) {
  const Matrix pts = kmeans_points();
  for (auto _ : state) benchmark::DoNotOptimize(kmeans_round(pts, 3, 1, static_cast<int>(state.range(0))).objective);
}

void BM_KmeansSerial(benchmark::State& state) {
  const Matrix pts = kmeans_points();
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::kmeans_round(pts, 3, 1, static_cast<int>(state.range(0))).objective);
}

}  // namespace

BENCHMARK(BM_OracleParallel)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleSerial)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GapExactParallel)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GapExactSerial)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KmeansParallel)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KmeansSerial)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
