// Copyright 2026 the adz authors
// SPDX-License-Identifier: Apache-2.0
#include "adz/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

namespace adz::spherical {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

SphereQuadrature build_sphere(int n, int resolution) {
  SphereQuadrature q;
  q.n = n;
  if (n == 2) {
    // Even count keeps the rule antipodally symmetric, so parity
    // cancellations (odd integrands, imaginary parts of even real densities)
    // hold to rounding rather than to quadrature accuracy.
    const int count = std::max(resolution, 4) + (std::max(resolution, 4) & 1);
    q.exact_degree = count - 1;
    const double w = 2.0 * kPi / count;
    q.points.reserve(2 * count);
    for (int k = 0; k < count; ++k) {
      const double phi = (2.0 * kPi * k) / count;
      q.points.push_back(std::cos(phi));
      q.points.push_back(std::sin(phi));
      q.weights.push_back(w);
    }
    return q;
  }
  if (n == 3) {
    const Quadrature1D polar = specfun::gauss_jacobi(resolution, 0.0);
    const int azim = 2 * resolution;
    q.exact_degree = std::min(2 * resolution - 1, azim - 1);
    q.points.reserve(3 * static_cast<std::size_t>(resolution) * azim);
    for (int i = 0; i < resolution; ++i) {
      const double t = polar.nodes[i];
      const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
      const double w = polar.weights[i] * (2.0 * kPi / azim);
      for (int k = 0; k < azim; ++k) {
        const double phi = (2.0 * kPi * k) / azim;
        q.points.push_back(s * std::cos(phi));
        q.points.push_back(s * std::sin(phi));
        q.points.push_back(t);
        q.weights.push_back(w);
      }
    }
    return q;
  }
  // theta = (sqrt(1-t^2) omega, t), dsigma_{n-1} = (1-t^2)^{(n-3)/2} dt dsigma_{n-2}
  const Quadrature1D polar = specfun::gauss_jacobi(resolution, 0.5 * (n - 3));
  const SphereQuadrature sub = build_sphere(n - 1, resolution);
  q.exact_degree = std::min(2 * resolution - 1, sub.exact_degree);
  const std::size_t sc = sub.count();
  q.points.reserve(static_cast<std::size_t>(n) * resolution * sc);
  for (int i = 0; i < resolution; ++i) {
    const double t = polar.nodes[i];
    const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
    for (std::size_t j = 0; j < sc; ++j) {
      const double* sp = sub.point(j);
      for (int c = 0; c < n - 1; ++c) q.points.push_back(s * sp[c]);
      q.points.push_back(t);
      q.weights.push_back(polar.weights[i] * sub.weights[j]);
    }
  }
  return q;
}

}  // namespace

SphereQuadrature sphere_quadrature(int n, int resolution) {
  if (n < 2 || resolution < 1)
    throw std::domain_error("sphere_quadrature: n >= 2, resolution >= 1 required");

  static std::mutex cache_mutex;
  static std::map<std::pair<int, int>, SphereQuadrature> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({n, resolution});
    if (it != cache.end()) return it->second;
  }
  SphereQuadrature q = build_sphere(n, resolution);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(std::make_pair(n, resolution), q);
  }
  return q;
}

double zonal(int l, int n, double dot) {
  const double v = std::clamp(dot, -1.0, 1.0);
  const double dim = static_cast<double>(specfun::harmonic_dim(l, n));
  return dim / specfun::sphere_area(n) * specfun::gegenbauer(l, 0.5 * (n - 2), v);
}

double zonal(int l, int n, const double* theta, const double* alpha) {
  double dot = 0.0;
  for (int c = 0; c < n; ++c) dot += theta[c] * alpha[c];
  return zonal(l, n, dot);
}

Cplx funk_hecke_rhs(const std::function<Cplx(double)>& profile, int l, int n,
                    const Quadrature1D& rule) {
  Cplx sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    sum += rule.weights[i] * profile(rule.nodes[i]) *
           specfun::gegenbauer(l, 0.5 * (n - 2), rule.nodes[i]);
  return specfun::sphere_area(n - 1) * sum;
}

PoissonResult poisson_kernel(int n, double big_r, double dot, double tol, int l_cap) {
  if (n < 2 || big_r < 0.0 || big_r > 0.9995)
    throw std::domain_error("poisson_kernel: n >= 2 and 0 <= R <= 0.9995 required");
  const double area = specfun::sphere_area(n);
  double sum = 0.0, rl = 1.0;
  for (int l = 0; l <= l_cap; ++l) {
    sum += rl * zonal(l, n, dot);
    rl *= big_r;
    // tail majorization: |R^j Z_j| <= R^j N(j,n)/area, and N(j+1)/N(j) is
    // nonincreasing for j >= 1, so the tail is geometric once R N(l+2)/N(l+1) < 1.
    const double b1 = rl * static_cast<double>(specfun::harmonic_dim(l + 1, n)) / area;
    const double ratio = big_r * static_cast<double>(specfun::harmonic_dim(l + 2, n)) /
                         static_cast<double>(specfun::harmonic_dim(l + 1, n));
    if (ratio < 1.0) {
      const double tail = b1 / (1.0 - ratio);
      if (tail < tol) return {sum, l + 1, tail};
    }
  }
  throw std::runtime_error(
      "poisson_kernel: tail bound unachievable within the degree cap "
      "(R too close to 1 for the requested tolerance)");
}

AbelSchedule dense_abel_schedule(int l_max, double growth_power) {
  AbelSchedule s;
  s.r_values = {0.9, 0.95, 0.99, 0.995, 0.999, 0.9995};
  s.l_max = l_max;
  s.growth_power = growth_power;
  return s;
}

namespace {

// Polynomial extrapolation of (eps_j, val_j) to eps = 0 (Neville).
Cplx neville_at_zero(const std::vector<double>& eps, const std::vector<Cplx>& val) {
  std::vector<Cplx> t = val;
  const std::size_t m = t.size();
  for (std::size_t k = 1; k < m; ++k)
    for (std::size_t j = 0; j + k < m; ++j)
      t[j] = (eps[j + k] * t[j] - eps[j] * t[j + 1]) / (eps[j + k] - eps[j]);
  return t[0];
}

}  // namespace

AbelResult abel_sum(const std::function<Cplx(int)>& terms, const AbelSchedule& schedule) {
  const auto& rv = schedule.r_values;
  if (rv.empty() || schedule.l_max < 0)
    throw std::domain_error("abel_sum: nonempty schedule and l_max >= 0 required");
  for (std::size_t j = 0; j < rv.size(); ++j)
    if (rv[j] <= 0.0 || rv[j] >= 1.0 || (j > 0 && rv[j] <= rv[j - 1]))
      throw std::domain_error("abel_sum: radii must increase within (0, 1)");

  std::vector<Cplx> a(schedule.l_max + 1);
  double growth_c = 0.0;
  for (int l = 0; l <= schedule.l_max; ++l) {
    a[l] = terms(l);
    growth_c = std::max(growth_c,
                        std::abs(a[l]) / std::pow(std::max(l, 1), schedule.growth_power));
  }

  AbelResult out;
  out.partial.reserve(rv.size());
  for (double R : rv) {
    Cplx sum = 0.0;
    double rl = 1.0;
    for (int l = 0; l <= schedule.l_max; ++l) {
      sum += rl * a[l];
      rl *= R;
    }
    out.partial.push_back(sum);
    if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag())) out.diverged = true;
  }

  // truncation tail at the largest radius: growth_c sum_{l>L} R^l l^p,
  // geometric majorization with ratio R ((L+2)/(L+1))^p.
  {
    const double R = rv.back();
    const int L = schedule.l_max;
    const double first =
        growth_c * std::pow(R, L + 1) * std::pow(static_cast<double>(L + 1), schedule.growth_power);
    const double ratio =
        R * std::pow((L + 2.0) / (L + 1.0), schedule.growth_power);
    out.tail_bound = (ratio < 1.0) ? first / (1.0 - ratio)
                                   : std::numeric_limits<double>::infinity();
  }

  if (rv.size() >= 3) {
    const double g_first = std::abs(out.partial[1] - out.partial[0]);
    const double g_last = std::abs(out.partial.back() - out.partial[out.partial.size() - 2]);
    if (g_last > g_first) out.diverged = true;
  }

  std::vector<double> eps(rv.size());
  for (std::size_t j = 0; j < rv.size(); ++j) eps[j] = 1.0 - rv[j];
  out.value = neville_at_zero(eps, out.partial);
  if (rv.size() >= 2) {
    std::vector<double> e2(eps.begin() + 1, eps.end());
    std::vector<Cplx> p2(out.partial.begin() + 1, out.partial.end());
    out.est_error = std::abs(out.value - neville_at_zero(e2, p2));
  }
  return out;
}

}  // namespace adz::spherical
