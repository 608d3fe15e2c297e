// Micro-benchmarks for the hot path: transforms, exact sub-flows and one
// composed splitting step, across grid sizes from desk scale up to the
// full-scale presets' neighborhood.

#include <benchmark/benchmark.h>

#include <complex>
#include <random>
#include <vector>

#include "splitflow/evolution.hpp"
#include "splitflow/problems/schrodinger_poisson.hpp"
#include "splitflow/scheme.hpp"
#include "splitflow/spectral.hpp"
#include "splitflow/torus.hpp"

namespace {

using namespace splitflow;

TorusField random_field(const TorusGrid& grid, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::vector<cplx> values(grid.size());
  for (auto& v : values) v = cplx(coef(rng), coef(rng));
  return TorusField(grid, FieldRepr::nodes, std::move(values));
}

void BM_dft_forward(benchmark::State& state) {
  const TorusGrid grid(static_cast<std::size_t>(state.range(0)));
  const TorusField u = random_field(grid, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dft(u, DftDirection::forward));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_dft_forward)->Arg(33)->Arg(257)->Arg(2049)->Arg(16385)
    ->Complexity(benchmark::oNLogN);

void BM_dft_round_trip(benchmark::State& state) {
  const TorusGrid grid(static_cast<std::size_t>(state.range(0)));
  const TorusField u = random_field(grid, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        dft(dft(u, DftDirection::forward), DftDirection::inverse));
  }
}
BENCHMARK(BM_dft_round_trip)->Arg(257)->Arg(2049)->Arg(16385);

void BM_linear_flow(benchmark::State& state) {
  const TorusGrid grid(static_cast<std::size_t>(state.range(0)));
  const TorusField u = random_field(grid, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(linear_flow(u, 1e-3));
  }
}
BENCHMARK(BM_linear_flow)->Arg(33)->Arg(257)->Arg(2049)->Arg(16385);

void BM_poisson_potential(benchmark::State& state) {
  const TorusGrid grid(static_cast<std::size_t>(state.range(0)));
  TorusField rho = random_field(grid, 4);
  // Make the source neutral so the solve is exercised, not the error path.
  TorusField hat = dft(rho, DftDirection::forward);
  hat[0] = cplx(0.0, 0.0);
  rho = dft(hat, DftDirection::inverse);
  for (auto _ : state) {
    benchmark::DoNotOptimize(poisson_potential(rho, 1e-8));
  }
}
BENCHMARK(BM_poisson_potential)->Arg(33)->Arg(257)->Arg(2049)->Arg(16385);

void BM_sp_nonlinear_flow(benchmark::State& state) {
  const TorusGrid grid(static_cast<std::size_t>(state.range(0)));
  const problems::InitialData data =
      problems::make_rough_initial_data(0.01, grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        problems::sp_nonlinear_flow(data.u0, 1e-3, data.source, 1e-4));
  }
}
BENCHMARK(BM_sp_nonlinear_flow)->Arg(33)->Arg(257)->Arg(2049)->Arg(16385);

void BM_strang_step(benchmark::State& state) {
  const TorusGrid grid(static_cast<std::size_t>(state.range(0)));
  const problems::InitialData data =
      problems::make_rough_initial_data(0.01, grid);
  const problems::SchrodingerPoissonProblem problem(grid, data.source, 1e-4);
  const SplittingScheme strang = make_scheme(SchemeKind::strang);
  for (auto _ : state) {
    benchmark::DoNotOptimize(step(problem, strang, 1e-3, data.u0));
  }
}
BENCHMARK(BM_strang_step)->Arg(257)->Arg(2049)->Arg(16385);

}  // namespace

BENCHMARK_MAIN();
