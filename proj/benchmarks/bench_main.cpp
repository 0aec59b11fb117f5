#include <benchmark/benchmark.h>

#include <cmath>

#include "hallfrac/curve.hpp"
#include "hallfrac/entropy.hpp"
#include "hallfrac/farey.hpp"
#include "hallfrac/fracton.hpp"
#include "hallfrac/spectrum.hpp"

namespace {

void BM_GenerateFarey(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    auto seq = hallfrac::generate_farey(n);
    benchmark::DoNotOptimize(seq.elements.data());
  }
}
BENCHMARK(BM_GenerateFarey)->Arg(10)->Arg(100)->Arg(1000);

void BM_VerifyP1P2(benchmark::State& state) {
  const auto seq = hallfrac::generate_farey(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hallfrac::verify_p1(seq).holds);
    benchmark::DoNotOptimize(hallfrac::verify_p2(seq).holds);
  }
}
BENCHMARK(BM_VerifyP1P2)->Arg(100);

void BM_FractalTable(benchmark::State& state) {
  for (auto _ : state) {
    auto table = hallfrac::fractal_table(6, 18);
    benchmark::DoNotOptimize(table.rows.data());
  }
}
BENCHMARK(BM_FractalTable);

void BM_SolveFracton(benchmark::State& state) {
  double xi = 1e-3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hallfrac::solve_fracton(1.37, xi));
    xi = xi > 1e3 ? 1e-3 : xi * 1.1;
  }
}
BENCHMARK(BM_SolveFracton);

void BM_Equilibrium(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hallfrac::equilibrium_consistency(1.6, 2.5));
}
BENCHMARK(BM_Equilibrium);

void BM_KochEstimate(benchmark::State& state) {
  const double d = std::log(4.0) / std::log(3.0);
  const auto curve = hallfrac::generate_koch(static_cast<int>(state.range(0)), d);
  const auto grid = hallfrac::geometric_resolutions(1.0 / 3.0, 1, 6);
  for (auto _ : state) benchmark::DoNotOptimize(hallfrac::estimate_dimension(curve, grid).h);
}
BENCHMARK(BM_KochEstimate)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
