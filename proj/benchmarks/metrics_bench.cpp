#include <benchmark/benchmark.h>

#include "support/generators.hpp"
#include "transit/construct.hpp"
#include "transit/metrics.hpp"

namespace {

const transit::Dataset& fixture(int city) {
  static const transit::Dataset london =
      transit::load_dataset(transit::dataset_in(std::filesystem::path(TRANSIT_DATA_DIR) / "london"));
  static const transit::Dataset nyc =
      transit::load_dataset(transit::dataset_in(std::filesystem::path(TRANSIT_DATA_DIR) / "nyc"));
  return city == 0 ? london : nyc;
}

const char* kCity[] = {"london", "nyc"};

void BM_Load(benchmark::State& state) {
  const auto dir = std::filesystem::path(TRANSIT_DATA_DIR) / kCity[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(transit::load_dataset(transit::dataset_in(dir)));
  state.SetLabel(kCity[state.range(0)]);
}

void BM_BuildFull(benchmark::State& state) {
  const auto& d = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(transit::build_network(transit::NetworkKind::Full, d));
  state.SetLabel(kCity[state.range(0)]);
}

void BM_BuildAccessible(benchmark::State& state) {
  const auto& d = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(transit::build_network(transit::NetworkKind::Accessible, d));
  state.SetLabel(kCity[state.range(0)]);
}

void BM_BetweennessFixture(benchmark::State& state) {
  const auto g = transit::build_network(transit::NetworkKind::Full, fixture(static_cast<int>(state.range(0))));
  const unsigned threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(transit::betweenness_all(g, transit::NetworkKind::Full, {threads}));
  state.SetLabel(kCity[state.range(0)]);
}

void BM_ClosenessFixture(benchmark::State& state) {
  const auto g = transit::build_network(transit::NetworkKind::Full, fixture(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(transit::closeness_all(g));
  state.SetLabel(kCity[state.range(0)]);
}

void BM_DiameterFixture(benchmark::State& state) {
  const auto g = transit::build_network(transit::NetworkKind::Full, fixture(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(transit::diameter(g));
  state.SetLabel(kCity[state.range(0)]);
}

// Sparse random graphs with mean degree about 2.3, close to a metro map.
void BM_BetweennessRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  gen::Rng rng(1);
  const auto g = gen::erdos_renyi(n, 2.3 / static_cast<double>(n), rng);
  for (auto _ : state) benchmark::DoNotOptimize(transit::betweenness_all(g, transit::NetworkKind::Full, {1}));
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_Load)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_BuildFull)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_BuildAccessible)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_BetweennessFixture)->Args({0, 1})->Args({1, 1})->Args({1, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosenessFixture)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiameterFixture)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BetweennessRandom)->RangeMultiplier(2)->Range(128, 2048)->Complexity()->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
