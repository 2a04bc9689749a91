// Copyright 2026 the adz authors
// SPDX-License-Identifier: Apache-2.0
#include "adz/radon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace adz::radon {

double activation(int alpha, double b) {
  if (alpha < 1) throw std::domain_error("activation: alpha >= 1 required");
  if (alpha == 1) return b > 0.0 ? 1.0 : 0.0;  // value at b = 0 fixed to 0
  if (b <= 0.0) return 0.0;
  return std::pow(b, alpha - 1) / specfun::factorial(alpha - 1);
}

Cplx dual_radon(const std::function<Cplx(const double*, double)>& h,
                const double* x, const spherical::SphereQuadrature& rule) {
  Cplx acc(0.0, 0.0);
  for (std::size_t j = 0; j < rule.count(); ++j) {
    const double* w = rule.point(j);
    double dot = 0.0;
    for (int k = 0; k < rule.n; ++k) dot += w[k] * x[k];
    acc += rule.weights[j] * h(w, dot);
  }
  return acc;
}

Cplx nalpha_eval(const barron::DualProfile& h_alpha, int alpha, double r,
                 const double* x, int b_points) {
  if (alpha < 1) throw std::domain_error("nalpha_eval: alpha >= 1 required");
  if (r <= 0.0) throw std::domain_error("nalpha_eval: r > 0 required");
  if (b_points < 8) throw std::domain_error("nalpha_eval: b_points >= 8 required");
  const int n = h_alpha.source.n;
  double s2 = 0.0;
  for (int k = 0; k < n; ++k) s2 += x[k] * x[k];
  if (std::sqrt(s2) > r * (1.0 + 1e-12))
    throw std::domain_error("nalpha_eval: x outside K(r)");

  const spherical::SphereQuadrature& rule = h_alpha.theta_rule;
  Cplx acc(0.0, 0.0);
  for (std::size_t j = 0; j < rule.count(); ++j) {
    const double* w = rule.point(j);
    double c = 0.0;
    for (int k = 0; k < n; ++k) c += w[k] * x[k];
    // The activation vanishes for b >= <w,x>, and for alpha <= 2 the
    // integrand is only piecewise smooth there, so the b-range always ends
    // at that break (or at r, whichever is smaller).
    const double hi = std::min(c, r);
    Cplx inner(0.0, 0.0);
    if (hi > -r) {
      const double len = hi + r;
      const int panels = std::max(
          1, static_cast<int>(std::ceil((b_points / 8.0) * len / (2.0 * r))));
      const specfun::Quadrature1D q =
          specfun::gauss_legendre_panels(-r, hi, panels, 8);
      for (std::size_t i = 0; i < q.nodes.size(); ++i) {
        const double b = q.nodes[i];
        inner +=
            q.weights[i] * h_alpha.eval_node(j, b) * activation(alpha, c - b);
      }
    }
    // Boundary layer at b = -r: the orders below alpha enter as point
    // masses once the bias range is truncated (Taylor expansion of the
    // order-0 profile at -r; the b-integral above is its remainder term).
    double poly = 1.0, fact = 1.0;
    for (int q2 = 0; q2 < alpha; ++q2) {
      inner += h_alpha.eval_node_order(j, q2, -r) * (poly / fact);
      poly *= c + r;
      fact *= q2 + 1;
    }
    acc += rule.weights[j] * inner;
  }
  return acc;
}

Cplx truncated_profile(const std::function<Cplx(double)>& h_l_alpha,
                       const std::vector<Cplx>& taylor_at_left, int alpha,
                       double r, double t) {
  if (static_cast<int>(taylor_at_left.size()) != alpha)
    throw std::domain_error(
        "truncated_profile: one Taylor coefficient per order below alpha");
  Cplx acc = convolve_activation(h_l_alpha, alpha, r, t);
  if (t >= -r && t <= r) {
    double poly = 1.0, fact = 1.0;
    for (int q = 0; q < alpha; ++q) {
      acc += taylor_at_left[static_cast<std::size_t>(q)] * (poly / fact);
      poly *= t + r;
      fact *= q + 1;
    }
  }
  return acc;
}

Cplx convolve_activation(const std::function<Cplx(double)>& h_l, int alpha,
                         double r, double t) {
  if (alpha < 1)
    throw std::domain_error("convolve_activation: alpha >= 1 required");
  if (r <= 0.0) throw std::domain_error("convolve_activation: r > 0 required");
  if (t > r) return Cplx(0.0, 0.0);   // the [t <= r] Iverson factor
  if (t <= -r) return Cplx(0.0, 0.0);  // empty b-range
  const double len = t + r;
  const int panels = std::max(1, static_cast<int>(std::ceil(len / 0.25)));
  const specfun::Quadrature1D q = specfun::gauss_legendre_panels(-r, t, panels, 12);
  Cplx acc(0.0, 0.0);
  for (std::size_t i = 0; i < q.nodes.size(); ++i) {
    const double b = q.nodes[i];
    acc += q.weights[i] * h_l(b) * activation(alpha, t - b);
  }
  return acc;
}

}  // namespace adz::radon
