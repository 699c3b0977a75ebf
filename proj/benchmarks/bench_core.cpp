// Copyright 2026 the qbrach authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <numbers>

#include "qbrach/brachistochrone.hpp"
#include "qbrach/classical.hpp"
#include "qbrach/dilation.hpp"
#include "qbrach/linalg.hpp"
#include "qbrach/pt.hpp"

namespace {

using namespace qbrach;

const PTParams kRef{1.0, 2.0, std::numbers::pi / 2.0};

void BM_MatExp2(benchmark::State& state) {
  const Matrix2 h = kRef.to_matrix();
  double t = 0.0;
  for (auto _ : state) {
    t += 1e-3;
    benchmark::DoNotOptimize(mat_exp2(h, t));
  }
}
BENCHMARK(BM_MatExp2);

void BM_Eig2(benchmark::State& state) {
  const Matrix2 h = kRef.to_matrix();
  for (auto _ : state) benchmark::DoNotOptimize(eig2(h));
}
BENCHMARK(BM_Eig2);

void BM_OptimalHamiltonian(benchmark::State& state) {
  const Vector2 a(1, 0);
  const Vector2 b = Vector2(0.6, Complex(0.0, 0.8)).normalized();
  for (auto _ : state) benchmark::DoNotOptimize(optimal_hamiltonian(a, b, 1.0));
}
BENCHMARK(BM_OptimalHamiltonian);

void BM_PtEvolve(benchmark::State& state) {
  const Vector2 up(1, 0);
  double t = 0.0;
  for (auto _ : state) {
    t += 1e-3;
    benchmark::DoNotOptimize(pt_evolve(kRef, up, t));
  }
}
BENCHMARK(BM_PtEvolve);

void BM_UnitaryDilation(benchmark::State& state) {
  double t = 0.0;
  for (auto _ : state) {
    t += 1e-3;
    benchmark::DoNotOptimize(unitary_dilation(kRef, t));
  }
}
BENCHMARK(BM_UnitaryDilation);

void BM_FixedDilation(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(fixed_dilation_hamiltonian(kRef, std::nullopt, -1, 2));
}
BENCHMARK(BM_FixedDilation);

void BM_OrbitRk4(benchmark::State& state) {
  const auto steps = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        integrate_orbit(Complex(0, 2), 1.0, 1e-4, 1e-4 * steps));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OrbitRk4)->Range(1 << 8, 1 << 14)->Complexity();

void BM_OrbitPeriod(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(orbit_period(Complex(0, 2), 1.0));
}
BENCHMARK(BM_OrbitPeriod);

}  // namespace

BENCHMARK_MAIN();
