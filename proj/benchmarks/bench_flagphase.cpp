#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

#include "flagphase/arith.hpp"
#include "flagphase/dhym.hpp"
#include "flagphase/flag.hpp"
#include "flagphase/rootsys.hpp"
#include "flagphase/stability.hpp"

using namespace flagphase;

namespace {

WeightVector ramp(std::size_t rank, long start) {
  WeightVector w(rank);
  for (std::size_t i = 0; i < rank; ++i) w[i] = start + static_cast<long>(i);
  return w;
}

void BM_RootSystem(benchmark::State& state) {
  const auto series = static_cast<Series>(state.range(0));
  const int rank = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_root_system(series, rank));
}
BENCHMARK(BM_RootSystem)
    ->Args({static_cast<long>(Series::A), 8})
    ->Args({static_cast<long>(Series::D), 8})
    ->Args({static_cast<long>(Series::E), 8});

void BM_BorelFlag(benchmark::State& state) {
  const auto rs = std::make_shared<const RootSystem>(build_root_system(Series::E, 8));
  for (auto _ : state) benchmark::DoNotOptimize(build_flag(rs, {}));
}
BENCHMARK(BM_BorelFlag)->Unit(benchmark::kMillisecond);

void BM_LiftedAngle(benchmark::State& state) {
  const auto x = build_flag(build_root_system(Series::E, 8), {});
  const KahlerClass w(x, ramp(8, 1));
  const InvariantClass psi(x, ramp(8, -3));
  for (auto _ : state) benchmark::DoNotOptimize(lifted_angle(x, w, psi));
}
BENCHMARK(BM_LiftedAngle);

void BM_SplitStability(benchmark::State& state) {
  const auto x = build_flag(build_root_system(Series::A, 2), {});
  const KahlerClass w(x, WeightVector{2, 3});
  std::vector<WeightVector> summands;
  for (long j = 0; j < state.range(0); ++j) summands.push_back(WeightVector{j % 5 - 2, (j * 7) % 3});
  const SplitBundle e(x, summands);
  for (auto _ : state) benchmark::DoNotOptimize(split_stability(x, w, e));
}
BENCHMARK(BM_SplitStability)->RangeMultiplier(2)->Range(4, 16);

void BM_HodgeRiemann(benchmark::State& state) {
  const auto x = build_flag(build_root_system(Series::D, 4), {});
  const KahlerClass w(x, WeightVector{1, 2, 1, 3});
  for (auto _ : state) benchmark::DoNotOptimize(hodge_riemann_matrix(x, w));
}
BENCHMARK(BM_HodgeRiemann);

void BM_SlopeLattice(benchmark::State& state) {
  const auto x = build_flag(build_root_system(Series::D, 4), {});
  const KahlerClass w(x, WeightVector{1, 2, 1, 3});
  const int gamma = x.generators().back();
  for (auto _ : state) benchmark::DoNotOptimize(slope_lattice(x, w, Integer(0), gamma));
}
BENCHMARK(BM_SlopeLattice);

}  // namespace

BENCHMARK_MAIN();
