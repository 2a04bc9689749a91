// Copyright 2026 the adz authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "adz/specfun.hpp"

namespace adz::spherical {

using specfun::Cplx;
using specfun::Quadrature1D;

// Quadrature rule for surface-measure integrals over the unit sphere in R^n.
// Points are stored flattened, row-major (count x n).  `exact_degree` is the
// largest polynomial degree the rule integrates exactly (trigonometric degree
// for n = 2).
struct SphereQuadrature {
  int n = 0;
  int exact_degree = 0;
  std::vector<double> points;
  std::vector<double> weights;

  std::size_t count() const { return weights.size(); }
  const double* point(std::size_t i) const { return points.data() + i * static_cast<std::size_t>(n); }
};

// n = 2: uniform angular grid with max(resolution, 4) points, rounded up to
//        an even count so the rule is exactly antipodally symmetric.
// n = 3: Gauss-Legendre polar rule (`resolution` nodes in cos of the polar
//        angle) x uniform azimuth with 2*resolution points.
// n >= 4: recursive product of Gauss-Jacobi((n-3)/2) polar rules over the
//        sphere one dimension down.
// Rules are cached internally; returned by value.
SphereQuadrature sphere_quadrature(int n, int resolution);

// Zonal kernel of degree l on S^{n-1} as a function of the inner product:
// Z_l = (N(l,n)/|S^{n-1}|) C_l^{(n-2)/2}(dot), with C normalized to 1 at 1.
double zonal(int l, int n, double dot);
double zonal(int l, int n, const double* theta, const double* alpha);

// |S^{n-2}| * int_{-1}^{1} profile(v) C_l^{(n-2)/2}(v) (1-v^2)^{(n-3)/2} dv.
// `rule` must have been built with exponent (n-3)/2.
Cplx funk_hecke_rhs(const std::function<Cplx(double)>& profile, int l, int n,
                    const Quadrature1D& rule);

struct PoissonResult {
  double value = 0.0;
  int terms = 0;        // number of degrees summed
  double tail_bound = 0.0;
};

// p(R, c) = sum_l R^l Z_l evaluated at inner product c.  Sums until the
// geometric majorization of the tail (|Z_l| <= N(l,n)/|S^{n-1}|) drops below
// `tol`; throws std::runtime_error when that cannot happen within l_cap
// degrees (R too close to 1 for the requested tolerance).
PoissonResult poisson_kernel(int n, double big_r, double dot,
                             double tol = 1e-10, int l_cap = 10000);

struct AbelSchedule {
  std::vector<double> r_values{0.9, 0.99, 0.999};
  int l_max = 48;
  double growth_power = 1.0;     // |terms(l)| assumed O(l^growth_power)
  double tail_tolerance = 1e-8;
};

// Denser schedule used when the extrapolated limit must be resolved well
// beyond what three radii support.
AbelSchedule dense_abel_schedule(int l_max = 48, double growth_power = 1.0);

struct AbelResult {
  Cplx value;                  // limit extrapolated to R = 1 (Neville in 1-R)
  std::vector<Cplx> partial;   // partial Abel sums, one per schedule radius
  double est_error = 0.0;      // drop-one-point extrapolation increment
  double tail_bound = 0.0;     // truncation tail estimate at the largest R
  bool diverged = false;
};

// Abel summation of sum_l R^l terms(l) truncated at schedule.l_max, followed
// by polynomial extrapolation of the partial sums in (1-R) to 0.
AbelResult abel_sum(const std::function<Cplx(int)>& terms,
                    const AbelSchedule& schedule);

}  // namespace adz::spherical
