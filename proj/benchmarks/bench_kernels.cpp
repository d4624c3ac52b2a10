#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "cavityswap/oracle.hpp"
#include "cavityswap/protocols.hpp"
#include "cavityswap/scattering.hpp"

namespace {

using namespace cavityswap;

const SystemParams kSwap = swap_configuration(10.0, 0.0, 0.0, 1.0, 0.5);

void BM_PhaseFactor(benchmark::State& state) {
  double k = -5.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phase_factor(k, kSwap));
    k = k > 5.0 ? -5.0 : k + 1e-3;
  }
}
BENCHMARK(BM_PhaseFactor);

void BM_TransferMatrix(benchmark::State& state) {
  double k = -5.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(transfer_matrix(k, kSwap));
    k = k > 5.0 ? -5.0 : k + 1e-3;
  }
}
BENCHMARK(BM_TransferMatrix);

void BM_XiGaussian(benchmark::State& state) {
  const Wavepacket w = gaussian_spectrum(0.0, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(xi_integral(w, kSwap));
}
BENCHMARK(BM_XiGaussian);

void BM_XiSampled(benchmark::State& state) {
  const Wavepacket w = sample_packet(GaussianPacket{0.0, 0.1, 0.0}, kGaussianWindow, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(xi_integral(w, kSwap));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_XiSampled)->Arg(1001)->Arg(10001);

void BM_SwapFrequenciesLossy(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(swap_frequencies(kSwap));
}
BENCHMARK(BM_SwapFrequenciesLossy);

void BM_EntangleFrequencies(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(entangle_frequencies(kSwap));
}
BENCHMARK(BM_EntangleFrequencies);

void BM_Fig2Sweep(benchmark::State& state) {
  const std::vector<double> lambdas = {2, 3, 4, 5, 6, 7, 8, 9, 10};
  for (auto _ : state) benchmark::DoNotOptimize(sweep_fig2(lambdas, 0.5, 0.1, SystemParams{}));
}
BENCHMARK(BM_Fig2Sweep)->Unit(benchmark::kMillisecond);

void BM_OraclePropagate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const OracleGrid g = OracleGrid::centered(0.0, 10.0, n, 0.01, 10.0);
  const ArrowheadHamiltonian h = build_hamiltonian(swap_configuration(3.0, 0.0, 0.0, 1.0, 0.0), g);
  std::vector<cplx> psi(n + 1, cplx(0.0, 0.0));
  psi[0] = 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(propagate(psi, h, g));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n) * 1000);
}
BENCHMARK(BM_OraclePropagate)->Arg(501)->Arg(2001)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
