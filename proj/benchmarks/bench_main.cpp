#include <benchmark/benchmark.h>

#include <numbers>

#include "qsr/analysis.hpp"
#include "qsr/electron.hpp"
#include "qsr/special_integrals.hpp"

namespace {

void BM_ElectronIntegral(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0)) / 1000.0;
  for (auto _ : state) benchmark::DoNotOptimize(qsr::f_e(0, x));
}
BENCHMARK(BM_ElectronIntegral)->Arg(100)->Arg(500)->Arg(990)->Arg(999);

void BM_Table1(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qsr::table1());
}
BENCHMARK(BM_Table1)->Unit(benchmark::kMillisecond);

void BM_DensityScan(benchmark::State& state) {
  const qsr::ElectronRadiation rad(qsr::Speed::from_beta(0.9));
  for (auto _ : state) {
    double sum = 0.0;
    for (int i = 0; i <= 180; ++i) {
      sum += rad.density(qsr::Polarization::total, qsr::Spin::down, std::numbers::pi * i / 180.0);
    }
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_DensityScan);

void BM_MaxAngle(benchmark::State& state) {
  const auto speed = qsr::Speed::from_gamma(40.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qsr::max_angle(qsr::Particle::electron, qsr::Polarization::total, qsr::Spin::down, speed));
  }
}
BENCHMARK(BM_MaxAngle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
