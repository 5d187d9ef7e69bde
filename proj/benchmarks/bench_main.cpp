#include <benchmark/benchmark.h>

#include "lagfill/double_points.hpp"
#include "lagfill/forms.hpp"
#include "lagfill/homotopy.hpp"
#include "lagfill/maslov.hpp"
#include "lagfill/pullback.hpp"
#include "lagfill/spin.hpp"

namespace {

using namespace lagfill;

const CutoffFunction& identity7() {
  static const CutoffFunction c(CutoffFunction::Variant::Identity, 7);
  return c;
}

void BM_ImmersionResidual(benchmark::State& state) {
  const LagrangianImmersedSurface surf = perturbed_immersion(identity7(), 2);
  const int grid = static_cast<int>(state.range(0));
  const SymplectizationForm omega(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        pullback_2form_residual(surf.map, omega, {grid, grid}));
  }
}
BENCHMARK(BM_ImmersionResidual)->Arg(100)->Arg(250)->Arg(500);

void BM_DoublePointCensus(benchmark::State& state) {
  const LagrangianImmersedSurface surf = perturbed_immersion(identity7(), 2);
  CensusOptions opts;
  opts.grid_t = opts.grid_theta = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(double_point_census(surf, opts));
  }
}
BENCHMARK(BM_DoublePointCensus)->Arg(200)->Arg(300);

void BM_DetPathUnwrap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(unwrap_argument(det_path_direct, 0.0, 1.0, n));
  }
}
BENCHMARK(BM_DetPathUnwrap)->Arg(10000)->Arg(100000);

void BM_FrameAgreement(benchmark::State& state) {
  const DoublePointFramePath fp(identity7());
  for (auto _ : state) {
    benchmark::DoNotOptimize(fp.max_disagreement(10000));
  }
}
BENCHMARK(BM_FrameAgreement);

void BM_SpunResidual(benchmark::State& state) {
  const LagrangianImmersedSurface base = perturbed_immersion(
      CutoffFunction(CutoffFunction::Variant::SmoothPlateau, 7), 2);
  const SpunSurface spun = spin(base, 4.0);
  const int grid = static_cast<int>(state.range(0));
  const SymplectizationForm omega(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        pullback_2form_residual(spun.map, omega, {grid, grid, grid}));
  }
}
BENCHMARK(BM_SpunResidual)->Arg(25)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
