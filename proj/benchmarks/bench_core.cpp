#include <numbers>

#include <benchmark/benchmark.h>

#include "troute/presets.hpp"
#include "troute/scattering.hpp"
#include "troute/sweep.hpp"
#include "troute/wavepacket.hpp"

namespace {

using namespace troute;

const ModelParams kBase = ModelParams::uniform(10, 1, 0.3, 0.3, 10);

void BM_ScatterFromA(benchmark::State& state) {
  const BlochMode mode = mode_from_wavenumber(1.1, 10, 1);
  for (auto _ : state) benchmark::DoNotOptimize(scatter_from_a(kBase, mode));
}
BENCHMARK(BM_ScatterFromA);

void BM_ScatterFromB(benchmark::State& state) {
  const BlochMode mode = mode_from_wavenumber(1.1, 10, 1);
  for (auto _ : state) benchmark::DoNotOptimize(scatter_from_b(kBase, mode));
}
BENCHMARK(BM_ScatterFromB);

void BM_PresetSweep(benchmark::State& state) {
  const auto spec = preset_sweeps("splitting-b").front().spec;
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec));
}
BENCHMARK(BM_PresetSweep)->Unit(benchmark::kMicrosecond);

void BM_Stationary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LatticeModel lat(n, n, kBase);
  for (auto _ : state) benchmark::DoNotOptimize(stationary_scatter(lat, Port::FromA, 1.1));
}
BENCHMARK(BM_Stationary)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_PropagatorSetup(benchmark::State& state) {
  const LatticeModel lat(100, 100, kBase);
  for (auto _ : state) benchmark::DoNotOptimize(SpectralPropagator(lat));
}
BENCHMARK(BM_PropagatorSetup)->Unit(benchmark::kMillisecond);

void BM_WavepacketRun(benchmark::State& state) {
  const SpectralPropagator prop(LatticeModel(100, 100, kBase));
  const WavePacketSpec spec{std::numbers::pi / 2, 8.0, -50, Port::FromA};
  for (auto _ : state) benchmark::DoNotOptimize(wavepacket_scatter(prop, spec));
}
BENCHMARK(BM_WavepacketRun)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
