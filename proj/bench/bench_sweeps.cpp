#include "cma/monge_ampere.h"
#include "cma/rmanifold.h"

#include <benchmark/benchmark.h>

namespace
{
const cma::MAEquation& mixed_equation()
{
  static const cma::MAEquation eq = cma::MAEquation::parse(
      "sin(x1*x2)", "1 + u^2", "p1 - p2", "u*cos(x1)", "exp(x2)");
  return eq;
}

cma::GridSpec grid(int n)
{
  cma::GridSpec g;
  g.axis1 = {0, -1.0, 1.0, n};
  g.axis2 = {2, -1.0, 1.0, n};
  g.fixed = {0.0, 0.3, 0.0, 0.2, -0.1};
  return g;
}

void BM_classify_region_serial(benchmark::State& state)
{
  const auto g = grid(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(cma::classify_region_serial(mixed_equation(), g, 1e-9));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
}

void BM_classify_region_omp(benchmark::State& state)
{
  const auto g = grid(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(cma::classify_region(mixed_equation(), g, 1e-9));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
}

void BM_lkl_sweep_serial(benchmark::State& state)
{
  const cma::RManifoldSpec spec{4, 3, cma::ZetaKind::Minus};
  const auto params = cma::random_params(static_cast<int>(state.range(0)), 1.0, 42);
  for (auto _ : state)
    benchmark::DoNotOptimize(cma::lkl_sweep_serial(spec, params));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_lkl_sweep_omp(benchmark::State& state)
{
  const cma::RManifoldSpec spec{4, 3, cma::ZetaKind::Minus};
  const auto params = cma::random_params(static_cast<int>(state.range(0)), 1.0, 42);
  for (auto _ : state)
    benchmark::DoNotOptimize(cma::lkl_sweep(spec, params));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
} // namespace

BENCHMARK(BM_classify_region_serial)->Arg(32)->Arg(128);
BENCHMARK(BM_classify_region_omp)->Arg(32)->Arg(128);
BENCHMARK(BM_lkl_sweep_serial)->Arg(1000)->Arg(20000);
BENCHMARK(BM_lkl_sweep_omp)->Arg(1000)->Arg(20000);

BENCHMARK_MAIN();
