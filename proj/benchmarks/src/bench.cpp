// Copyright 2026 the adz authors
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <vector>

#include "adz/barron.hpp"
#include "adz/rvfl.hpp"
#include "adz/specfun.hpp"
#include "adz/spherical.hpp"

namespace {

void bm_gegenbauer(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  double v = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(adz::specfun::gegenbauer(l, 0.5, v));
    v = v < 0.99 ? v + 1e-6 : 0.1;
  }
}
BENCHMARK(bm_gegenbauer)->Arg(8)->Arg(48);

void bm_bessel_j(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  double nu = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(adz::specfun::bessel_j(nu, x));
    nu = nu < 20.0 ? nu + 0.5 : 0.5;
  }
}
BENCHMARK(bm_bessel_j)->Arg(2)->Arg(50)->Arg(800);

void bm_gauss_jacobi(benchmark::State& state) {
  const int count = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(adz::specfun::gauss_jacobi(count, 0.0));
}
BENCHMARK(bm_gauss_jacobi)->Arg(32)->Arg(128);

void bm_poisson_kernel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(adz::spherical::poisson_kernel(3, 0.95, 0.3, 1e-10));
}
BENCHMARK(bm_poisson_kernel);

void bm_profile_eval(benchmark::State& state) {
  const auto density = adz::barron::make_density("shifted_gaussian", 3);
  const auto profile = adz::barron::make_dual_profile(density, 2, 8, 0.0, 256, 1);
  double t = -1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(profile.eval_node(0, t));
    t = t < 1.0 ? t + 1e-4 : -1.0;
  }
}
BENCHMARK(bm_profile_eval);

void bm_eval_network(benchmark::State& state) {
  const auto density = adz::barron::make_density("shifted_gaussian", 3);
  const auto profile = adz::barron::make_dual_profile(density, 2, 8, 0.0, 512, 1);
  const auto law = adz::rvfl::build_density(profile, 2, 1.0);
  const auto net = adz::rvfl::build_network(law, static_cast<int>(state.range(0)), 7);
  const double x[3] = {0.2, -0.1, 0.4};
  for (auto _ : state) benchmark::DoNotOptimize(adz::rvfl::eval_network(net, x));
}
BENCHMARK(bm_eval_network)->Arg(1024)->Arg(8192);

}  // namespace

BENCHMARK_MAIN();
