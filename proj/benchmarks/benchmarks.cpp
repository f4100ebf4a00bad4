#include <benchmark/benchmark.h>

#include "qriccati/dynamics.hpp"
#include "qriccati/ladder.hpp"
#include "qriccati/models.hpp"

using namespace qriccati;

namespace {

Model make_model(ModelFamily family) {
  Model m;
  m.family = family;
  m.gamma = family == ModelFamily::Conservative ? 0.0 : 0.4;
  m.omega = FrequencyProfile::constant(1.7);
  return m;
}

SystemState make_state() {
  SystemState s;
  s.classical = {1.0, -0.3};
  s.riccati.c = Complex{0.2, 1.4};
  return s;
}

void BM_integrate(benchmark::State& state) {
  Model m = make_model(static_cast<ModelFamily>(state.range(0)));
  SystemState s0 = make_state();
  IntegrationOptions opt;
  opt.stride = 100;
  for (auto _ : state) {
    TimeSeries run = integrate(m, s0, 10.0, 1e-3, opt);
    benchmark::DoNotOptimize(run.states.back().riccati.c);
  }
  state.SetItemsProcessed(state.iterations() * 10000);  // integration steps
}

void BM_apply_creation(benchmark::State& state) {
  PolyGaussianState s;
  s.coeffs.assign(static_cast<size_t>(state.range(0)) + 1, Complex{0.3, -0.2});
  s.width.c = Complex{0.2, 1.4};
  for (auto _ : state) {
    PolyGaussianState raised = apply_creation(s);
    benchmark::DoNotOptimize(raised.coeffs.back());
  }
}

void BM_inner_product(benchmark::State& state) {
  PolyGaussianState bra, ket;
  bra.coeffs.assign(static_cast<size_t>(state.range(0)) + 1, Complex{0.3, -0.2});
  bra.width.c = Complex{0.2, 1.4};
  ket = bra;
  ket.x_center = 0.7;
  ket.p_center = -0.4;
  ket.width.c = Complex{-0.1, 0.9};
  for (auto _ : state) {
    Complex overlap = inner_product(bra, ket);
    benchmark::DoNotOptimize(overlap);
  }
}

}  // namespace

BENCHMARK(BM_integrate)
    ->Arg(static_cast<int>(ModelFamily::Conservative))
    ->Arg(static_cast<int>(ModelFamily::CaldirolaKanai))
    ->Arg(static_cast<int>(ModelFamily::Expanding))
    ->Arg(static_cast<int>(ModelFamily::LogNlse))
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_apply_creation)->Arg(8)->Arg(32);
BENCHMARK(BM_inner_product)->Arg(0)->Arg(8)->Arg(32);

BENCHMARK_MAIN();
