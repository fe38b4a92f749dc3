#include <benchmark/benchmark.h>

#include "tdpt/norm_analysis.hpp"
#include "tdpt/propagator.hpp"
#include "tdpt/pulse.hpp"

using namespace tdpt;

namespace {

struct Model {
  SpatialGrid grid;
  SystemHamiltonian h;
  CouplingOperator w;
  TwoComponentWaveFunction psi;
  explicit Model(std::size_t n)
      : grid(-60.0, 60.0, n),
        h(SystemHamiltonian::linear(grid, 2000.0, {1e-3, 0.0, 0.1})),
        w(1.0, LaserPulse::unchirped(0.0119, LaserPulse::beta_from_fwhm(413.0), 50.0, 0.1)),
        psi(gaussian_packet(grid, 0.0, 1.0, 0.0, ElectronicState::Excited)) {}
};

void BM_SplitOperatorStep(benchmark::State& state) {
  const Model m(static_cast<std::size_t>(state.range(0)));
  const SplitOperator u(m.h, 3.31);
  auto psi = m.psi;
  for (auto _ : state) {
    u.apply(psi);
    benchmark::DoNotOptimize(psi.psi1().data());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SplitOperatorStep)->Arg(512)->Arg(1024)->Arg(4096);

void BM_SimpleAlgorithmStep(benchmark::State& state) {
  const Model m(1024);
  const auto k = static_cast<std::size_t>(state.range(0));
  const SimpleAlgorithm alg(m.h, m.w, 3.31);
  PerturbativeState ps(m.psi, k, 3.31);
  for (std::size_t s = 0; s < 10; ++s) alg.advance(ps);
  for (auto _ : state) {
    alg.advance(ps);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_SimpleAlgorithmStep)->Arg(2)->Arg(6)->Arg(14);

void BM_NormOrders(benchmark::State& state) {
  const Model m(1024);
  const auto k = static_cast<std::size_t>(state.range(0));
  const SimpleAlgorithm alg(m.h, m.w, 3.31);
  PerturbativeState ps(m.psi, k, 3.31);
  for (std::size_t s = 0; s < 20; ++s) alg.advance(ps);
  for (auto _ : state) benchmark::DoNotOptimize(norm_orders(ps));
}
BENCHMARK(BM_NormOrders)->Arg(2)->Arg(6)->Arg(14);

void BM_ExactStep(benchmark::State& state) {
  const Model m(1024);
  const ExactPropagator prop(m.h, m.w, 0.5);
  auto psi = m.psi;
  double t = 0.25;
  for (auto _ : state) {
    prop.advance(psi, t);
    t += 0.5;
  }
}
BENCHMARK(BM_ExactStep);

}  // namespace

BENCHMARK_MAIN();
