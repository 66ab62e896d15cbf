// Serial reference against the OpenMP kernels. Run with OMP_NUM_THREADS set
// to compare scaling; results of both paths are bitwise equal.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "arakelov/equilibrium.hpp"
#include "arakelov/fekete.hpp"
#include "arakelov/heights.hpp"
#include "arakelov/corpus.hpp"
#include "arakelov/kernels.hpp"

using namespace arakelov;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(1) == 0 ? Exec::Serial : Exec::Parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(1) == 0 ? "serial" : "parallel"); }

void BM_ChordalPairSum(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  std::vector<Complex> z;
  for (int k = 0; k < n; ++k) z.push_back(std::polar(1.0 + 0.01 * k, 2.399963 * k));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::chordal_pair_sum(z, exec_of(state)));
  label(state);
}

void BM_SphereEnergyGradient(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const auto params = equilibrium_sample(TargetSet::sphere(), n, 1, 0);
  std::vector<double> grad(params.size());
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sphere_pair_sum(params, grad, exec_of(state)));
  label(state);
}

void BM_CirclePairSum(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const auto params = equilibrium_sample(TargetSet::real_line(), n, 1, 0);
  std::vector<double> grad(params.size());
  for (auto _ : state) benchmark::DoNotOptimize(kernels::circle_pair_sum(params, grad, exec_of(state)));
  label(state);
}

void BM_IntervalEnergyQuadrature(benchmark::State& state) {
  QuadratureOptions opt;
  opt.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(energy_double_integral(TargetSet::interval(2.0), opt).value);
  label(state);
}

void BM_CorpusHeights(benchmark::State& state) {
  const auto corpus = random_corpus(static_cast<std::size_t>(state.range(0)), 7);
  const std::vector<AlgebraicPoint> points(corpus.begin(), corpus.end());
  for (auto _ : state) benchmark::DoNotOptimize(height_reports(points, kDefaultRootTolerance, exec_of(state)));
  label(state);
}

void BM_FeketeRestarts(benchmark::State& state) {
  DescentOptions opt;
  opt.exec = exec_of(state);
  opt.budget = 500;
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimize(TargetSet::sphere(), static_cast<int>(state.range(0)), 3, opt).energy);
  }
  label(state);
}

}  // namespace

BENCHMARK(BM_ChordalPairSum)->ArgsProduct({{64, 512, 2048}, {0, 1}});
BENCHMARK(BM_SphereEnergyGradient)->ArgsProduct({{64, 512, 2048}, {0, 1}});
BENCHMARK(BM_CirclePairSum)->ArgsProduct({{64, 512, 2048}, {0, 1}});
BENCHMARK(BM_IntervalEnergyQuadrature)->ArgsProduct({{0}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CorpusHeights)->ArgsProduct({{1000}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FeketeRestarts)->ArgsProduct({{32}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
