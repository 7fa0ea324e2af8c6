#include <benchmark/benchmark.h>

#include "cover/coverage.hpp"
#include "cover/experiment.hpp"
#include "cover/lloyd.hpp"
#include "cover/sampling.hpp"
#include "cover/scenario.hpp"

namespace {

cover::SensorConfiguration random_config(int k, std::uint64_t seed) {
  cover::RngStream rng(seed, 0);
  return cover::uniform_sample(cover::unit_square(), k, rng);
}

void BM_VoronoiPartition(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const cover::ConvexPolygon domain = cover::unit_square();
  const cover::SensorConfiguration sites = random_config(k, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cover::voronoi_partition(sites, domain));
  }
}
BENCHMARK(BM_VoronoiPartition)->Arg(10)->Arg(20)->Arg(50);

void BM_PolygonMoments(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  const cover::Scenario scenario = cover::reference_scenario();
  const cover::DensityField field =
      cover::normalize(scenario.density, scenario.domain);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cover::polygon_moments(field, scenario.domain, depth));
  }
}
BENCHMARK(BM_PolygonMoments)->DenseRange(2, 6);

void BM_BuildCells(benchmark::State& state) {
  const double epsilon = 1.0 / static_cast<double>(state.range(0));
  const cover::Scenario scenario = cover::reference_scenario();
  const cover::DensityField field =
      cover::normalize(scenario.density, scenario.domain);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cover::build_cells(scenario.domain, epsilon, field));
  }
}
BENCHMARK(BM_BuildCells)->Arg(10)->Arg(20);

void BM_WeightedD2Sample(benchmark::State& state) {
  const cover::Scenario scenario = cover::reference_scenario();
  const cover::PreparedScenario prepared =
      cover::prepare_scenario(scenario);
  cover::RngStream rng(5, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cover::weighted_d2_sample(prepared.cells, scenario.k, rng));
  }
}
BENCHMARK(BM_WeightedD2Sample);

void BM_CoverageCost(benchmark::State& state) {
  const cover::Scenario scenario = cover::reference_scenario();
  const cover::DensityField field =
      cover::normalize(scenario.density, scenario.domain);
  const cover::SensorConfiguration sensors = random_config(10, 23);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cover::coverage_cost(sensors, field, scenario.domain));
  }
}
BENCHMARK(BM_CoverageCost);

void BM_LloydStep(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const cover::Scenario scenario = cover::reference_scenario();
  const cover::DensityField field =
      cover::normalize(scenario.density, scenario.domain);
  const cover::SensorConfiguration sensors = random_config(k, 37);
  const cover::DescentSettings settings;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cover::lloyd_step(sensors, field, scenario.domain, settings));
  }
}
BENCHMARK(BM_LloydStep)->Arg(10)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
