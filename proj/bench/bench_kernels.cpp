#include <benchmark/benchmark.h>

#include "unitals/analysis.hpp"
#include "unitals/kernels.hpp"
#include "unitals/unital.hpp"

using namespace unitals;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_LineCounts(benchmark::State& state) {
  const Plane plane{Field(7, 2)};
  const PointSet s = hermitian_unital(plane);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::line_counts(plane, s, exec_of(state)));
}

void BM_ResidualSweep(benchmark::State& state) {
  const Field f(5, 2);
  const auto [c, d] = canonical_pair(f, PencilKind::Hyperbolic, admissible_ks(f, PencilKind::Hyperbolic).front());
  const std::uint64_t end = projective_count(f.order(), 5);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::residual_sweep(f, c, d, 0, end, exec_of(state)));
}

void BM_ResidualReference(benchmark::State& state) {
  const Field f(3, 2);
  const auto [c, d] = canonical_pair(f, PencilKind::Hyperbolic, admissible_ks(f, PencilKind::Hyperbolic).front());
  const std::uint64_t end = projective_count(f.order(), 5);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::residual_sweep_reference(f, c, d, 0, end));
}

void BM_Generator(benchmark::State& state) {
  const Plane plane{Field(5, 2)};
  const auto u = behs_unital(plane);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::contained_conics_generator(plane, u.points, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_LineCounts)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ResidualSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ResidualReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Generator)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
