// Copyright 2026 the adz authors
// SPDX-License-Identifier: Apache-2.0
//
// Ramp-family activations, the dual Radon transform, the truncated-bias
// reconstruction operator and the per-degree truncated convolution.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "adz/barron.hpp"
#include "adz/radon.hpp"
#include "adz/specfun.hpp"
#include "adz/spherical.hpp"
#include "doctest.h"

using adz::barron::DualProfile;
using adz::barron::SourceDensity;
using adz::specfun::Cplx;

namespace {

constexpr double kPi = 3.14159265358979323846;

Cplx shifted_f(const double* x) {
  const double s = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
  return std::exp(Cplx(0.0, x[0])) * std::pow(2.0 * kPi, 1.5) * std::exp(-0.5 * s);
}

// Small deterministic point generator inside the closed ball K(rad).
std::vector<std::array<double, 3>> ball_points(int count, double rad, std::uint64_t s) {
  std::vector<std::array<double, 3>> pts;
  std::uint64_t state = s;
  auto next = [&state]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(state >> 11) / 9007199254740992.0;  // [0, 1)
  };
  while (static_cast<int>(pts.size()) < count) {
    std::array<double, 3> p{2.0 * next() - 1.0, 2.0 * next() - 1.0, 2.0 * next() - 1.0};
    const double r2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
    if (r2 <= 1.0) {
      for (double& c : p) c *= rad;
      pts.push_back(p);
    }
  }
  return pts;
}

}  // namespace

TEST_CASE("activation: antiderivatives of the Heaviside step") {
  // alpha = 1 is the step itself with value 0 at the kink.
  CHECK(adz::radon::activation(1, -0.5) == 0.0);
  CHECK(adz::radon::activation(1, 0.0) == 0.0);
  CHECK(adz::radon::activation(1, 0.5) == 1.0);
  // alpha >= 2: b_+^{alpha-1} / (alpha-1)!.
  CHECK(adz::radon::activation(2, 1.5) == doctest::Approx(1.5));
  CHECK(adz::radon::activation(2, -1.0) == 0.0);
  CHECK(adz::radon::activation(3, 2.0) == doctest::Approx(2.0));
  CHECK(adz::radon::activation(4, 2.0) == doctest::Approx(8.0 / 6.0));
  // Nonnegative and nondecreasing.
  for (int a = 1; a <= 6; ++a) {
    double prev = adz::radon::activation(a, -2.0);
    for (double b = -2.0; b <= 2.0; b += 0.125) {
      const double v = adz::radon::activation(a, b);
      CHECK(v >= 0.0);
      CHECK(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("dual_radon integrates exactly against the sphere rule") {
  const double x[3] = {0.3, -0.4, 0.5};
  const double xsq = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
  const auto rule3 = adz::spherical::sphere_quadrature(3, 8);

  const auto one = [](const double*, double) { return Cplx(1.0, 0.0); };
  CHECK(std::abs(adz::radon::dual_radon(one, x, rule3) - Cplx(4.0 * kPi, 0.0)) < 1e-10);

  const auto linear = [](const double*, double b) { return Cplx(b, 0.0); };
  CHECK(std::abs(adz::radon::dual_radon(linear, x, rule3)) < 1e-12);

  const auto square = [](const double*, double b) { return Cplx(b * b, 0.0); };
  CHECK(std::abs(adz::radon::dual_radon(square, x, rule3) -
                 Cplx(xsq * 4.0 * kPi / 3.0, 0.0)) < 1e-10);

  const auto rule2 = adz::spherical::sphere_quadrature(2, 8);
  const double x2[2] = {0.7, 0.1};
  const auto one2 = [](const double*, double) { return Cplx(1.0, 0.0); };
  CHECK(std::abs(adz::radon::dual_radon(one2, x2, rule2) - Cplx(2.0 * kPi, 0.0)) < 1e-10);
}

TEST_CASE("nalpha_eval reconstructs f on the ball") {
  const SourceDensity shifted = adz::barron::make_density("shifted_gaussian", 3);
  const DualProfile h1 = adz::barron::make_dual_profile(shifted, 1, 12, 0.0, 1024);
  const DualProfile h2 = adz::barron::make_dual_profile(shifted, 2, 12, 0.0, 1024);
  const DualProfile h3 = adz::barron::make_dual_profile(shifted, 3, 12, 0.0, 1024);

  SUBCASE("matches the closed form at random points, r larger than the ball") {
    for (const auto& p : ball_points(10, 1.0, 42)) {
      const Cplx recon = adz::radon::nalpha_eval(h2, 2, 2.0, p.data());
      CHECK(std::abs(recon - shifted_f(p.data())) < 1e-4);
    }
  }

  SUBCASE("result is independent of the order alpha") {
    for (const auto& p : ball_points(3, 0.9, 7)) {
      const Cplx r1 = adz::radon::nalpha_eval(h1, 1, 1.0, p.data());
      const Cplx r2 = adz::radon::nalpha_eval(h2, 2, 1.0, p.data());
      const Cplx r3 = adz::radon::nalpha_eval(h3, 3, 1.0, p.data());
      CHECK(std::abs(r1 - r2) < 2e-4);
      CHECK(std::abs(r2 - r3) < 2e-4);
    }
  }

  SUBCASE("result is independent of the bias radius r") {
    for (const auto& p : ball_points(3, 0.9, 11)) {
      const Cplx ra = adz::radon::nalpha_eval(h2, 2, 1.0, p.data());
      const Cplx rb = adz::radon::nalpha_eval(h2, 2, 2.0, p.data());
      CHECK(std::abs(ra - rb) < 2e-4);
    }
  }

  SUBCASE("zero profile reconstructs zero") {
    DualProfile zero = h2;
    for (auto& v : zero.table) v = Cplx(0.0, 0.0);
    for (auto& v : zero.amp_pos) v = Cplx(0.0, 0.0);
    for (auto& v : zero.amp_neg) v = Cplx(0.0, 0.0);
    for (auto& v : zero.sup_per_theta) v = 0.0;
    zero.norm_1_inf = 0.0;
    const double x[3] = {0.4, 0.1, -0.2};
    CHECK(std::abs(adz::radon::nalpha_eval(zero, 2, 1.0, x)) == 0.0);
  }
}

TEST_CASE("order-1 reconstruction is Lipschitz with the dual-profile constant") {
  const SourceDensity shifted = adz::barron::make_density("shifted_gaussian", 3);
  const DualProfile h1 = adz::barron::make_dual_profile(shifted, 1, 8, 0.0, 1024);
  const double cap = adz::barron::norm_1_inf(h1) * (1.0 + 1e-3);

  // 200 evaluation points give 19900 distinct pairs.
  const auto pts = ball_points(200, 1.0, 2026);
  std::vector<Cplx> vals(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    vals[i] = adz::radon::nalpha_eval(h1, 1, 1.0, pts[i].data(), 64);
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      double d2 = 0.0;
      for (int c = 0; c < 3; ++c) {
        const double dc = pts[i][c] - pts[j][c];
        d2 += dc * dc;
      }
      const double dist = std::sqrt(d2);
      if (dist < 1e-9) continue;
      worst = std::max(worst, std::abs(vals[i] - vals[j]) / dist);
    }
  }
  CHECK(worst <= cap);
}

TEST_CASE("convolve_activation: running integral and sup bound") {
  SUBCASE("alpha = 1 is the running integral of the profile") {
    const auto h = [](double b) { return std::exp(-b * b) * Cplx(1.0, 0.5 * b); };
    const double r = 1.0;
    for (double t : {-0.5, 0.2, 0.9}) {
      const auto quad = adz::specfun::gauss_legendre_panels(-r, std::min(t, r), 4, 16);
      Cplx want{0.0, 0.0};
      for (std::size_t i = 0; i < quad.nodes.size(); ++i) {
        want += quad.weights[i] * h(quad.nodes[i]);
      }
      CHECK(std::abs(adz::radon::convolve_activation(h, 1, r, t) - want) < 1e-10);
    }
    // Beyond the bias radius the truncated profile is defined as zero.
    CHECK(std::abs(adz::radon::convolve_activation(h, 1, 1.0, 2.0)) == 0.0);
  }

  SUBCASE("sup of the convolution obeys the (2r)^alpha / alpha! bound") {
    const auto h = [](double b) { return Cplx(std::cos(3.0 * b), std::sin(2.0 * b)); };
    const double r = 1.0;
    for (int alpha : {1, 2, 3}) {
      double sup_h = 0.0;
      double sup_conv = 0.0;
      for (int i = 0; i <= 400; ++i) {
        const double t = -r + 2.0 * r * i / 400.0;
        sup_h = std::max(sup_h, std::abs(h(t)));
        sup_conv = std::max(sup_conv, std::abs(adz::radon::convolve_activation(h, alpha, r, t)));
      }
      double fact = 1.0;
      for (int k = 2; k <= alpha; ++k) fact *= k;
      CHECK(sup_conv <= sup_h * std::pow(2.0 * r, alpha) / fact + 1e-8);
    }
  }
}

TEST_CASE("truncated convolution plus boundary layer recovers the order-0 profile") {
  const SourceDensity shifted = adz::barron::make_density("shifted_gaussian", 3);
  adz::barron::ZonalDecomposer dec(shifted, 3);
  const double th[3] = {0.6, 0.0, 0.8};
  const double r = 1.0;

  for (int l : {0, 1}) {
    for (int alpha : {1, 2}) {
      const auto h_l = [&dec, l, alpha, &th](double t) {
        return dec.g_alpha(l, alpha, th, t);
      };
      std::vector<Cplx> taylor(alpha);
      for (int q = 0; q < alpha; ++q) taylor[q] = dec.g_alpha(l, q, th, -r);
      for (double t : {-0.8, -0.2, 0.5, 1.0}) {
        const Cplx got = adz::radon::truncated_profile(h_l, taylor, alpha, r, t);
        const Cplx want = dec.g_alpha(l, 0, th, t);
        CHECK(std::abs(got - want) < 1e-6);
      }
    }
  }

  // Negative control: dropping the boundary layer leaves the Taylor
  // polynomial of the order-0 profile at -r missing.
  const auto h_l = [&dec, &th](double t) { return dec.g_alpha(1, 2, th, t); };
  const Cplx bare = adz::radon::convolve_activation(h_l, 2, r, -0.9);
  CHECK(std::abs(bare - dec.g_alpha(1, 0, th, -0.9)) > 1e-3);
}
