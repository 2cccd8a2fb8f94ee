#include <benchmark/benchmark.h>

#include "plovlab/builders.hpp"
#include "plovlab/growth.hpp"
#include "plovlab/kernels.hpp"

using namespace plovlab;

namespace {

struct Setup {
  IntersectionModel model;
  DeltaPoly delta;
  std::vector<QPoly> coeffs;
};

Setup single_block(int d) {
  auto [model, action] = build_torus(jordan_block(d));
  const UnipotentCert cert = certify(action.matrix);
  DeltaPoly dp = delta_poly(cert.nilpotent, model.kahler());
  std::vector<QPoly> coeffs = dp.coefficients();
  return {std::move(model), std::move(dp), std::move(coeffs)};
}

void expand(benchmark::State& state, Exec exec) {
  const Setup s = single_block(static_cast<int>(state.range(0)));
  const int d = s.model.complex_dim();
  for (auto _ : state) {
    benchmark::DoNotOptimize(expand_power(s.model, s.coeffs, s.delta.terms, d, {}, exec));
  }
}

void BM_ExpandSerial(benchmark::State& state) { expand(state, Exec::serial); }
void BM_ExpandParallel(benchmark::State& state) { expand(state, Exec::parallel); }

void BM_ExpandReference(benchmark::State& state) {
  const Setup s = single_block(static_cast<int>(state.range(0)));
  const int d = s.model.complex_dim();
  for (auto _ : state) {
    benchmark::DoNotOptimize(expand_power_reference(s.model, s.coeffs, s.delta.terms, d, {}));
  }
}

void pairing(benchmark::State& state, Exec exec) {
  const Setup s = single_block(static_cast<int>(state.range(0)));
  const std::vector<ClassVec> prefix{s.delta.terms.back()};
  for (auto _ : state) benchmark::DoNotOptimize(pairing_vector(s.model, prefix, exec));
}

void BM_PairingSerial(benchmark::State& state) { pairing(state, Exec::serial); }
void BM_PairingParallel(benchmark::State& state) { pairing(state, Exec::parallel); }

}  // namespace

BENCHMARK(BM_ExpandReference)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExpandSerial)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExpandParallel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairingSerial)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairingParallel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  configure_threads_from_env();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
