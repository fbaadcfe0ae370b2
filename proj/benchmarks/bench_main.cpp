#include <benchmark/benchmark.h>

#include "qlab/oscillator.hpp"

using namespace qlab;

static void BM_HermiteDirect(benchmark::State& st) {
  const QContext c = QContext::make(0.5, 0.25);
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(hermite_h(n, 0.7, c));
}
BENCHMARK(BM_HermiteDirect)->Arg(4)->Arg(12)->Arg(40);

static void BM_HermiteFamilyCached(benchmark::State& st) {
  HermiteFamily<double> f(QContext::make(0.5, 0.25), 40);
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(f.h(n, 0.7));
}
BENCHMARK(BM_HermiteFamilyCached)->Arg(4)->Arg(12)->Arg(40);

static void BM_Weight(benchmark::State& st) {
  const QContext c = QContext::make(st.range(0) / 10.0, 0.25);
  for (auto _ : st) benchmark::DoNotOptimize(weight(1.3, c));
}
BENCHMARK(BM_Weight)->Arg(3)->Arg(5)->Arg(8);

static void BM_JacksonLine(benchmark::State& st) {
  const QContext c = QContext::make(0.5, 0.25);
  FunctionHandle f = [&c](double x) { return weight(x, c) * x * x; };
  for (auto _ : st) benchmark::DoNotOptimize(jackson_integral(f, JacksonDomain::line, c).value);
}
BENCHMARK(BM_JacksonLine);

static void BM_AlgebraResidual(benchmark::State& st) {
  const QContext c = QContext::make(0.5, 0.25);
  const int dim = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(algebra_residual(AlgebraRelation::Kminus_Kplus, dim, c));
}
BENCHMARK(BM_AlgebraResidual)->Arg(12)->Arg(64);

static void BM_PoissonKernel(benchmark::State& st) {
  const QContext c = QContext::make(st.range(0) / 10.0, 0.25);
  for (auto _ : st) benchmark::DoNotOptimize(poisson_kernel_residual(0.8, 0.3, KernelMode::general, c));
}
BENCHMARK(BM_PoissonKernel)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
