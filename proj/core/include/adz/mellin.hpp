// Copyright 2026 the adz authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

#include "adz/specfun.hpp"

namespace adz::mellin {

using specfun::Cplx;

struct MultiplierSpec {
  int l = 0;
  int alpha = 0;
  int n = 3;
};

// alpha >= 1 when l is a positive even degree, alpha >= 0 otherwise.
bool admissible(const MultiplierSpec& spec);

// Whether l belongs to the even family {2, 4, ...}.
inline bool even_family(int l) { return l >= 2 && l % 2 == 0; }

// The multiplier N_l^alpha(y) from its three-case definition (log-gamma
// differences and Pochhammer symbols; total on real y for admissible specs).
Cplx n_multiplier(const MultiplierSpec& spec, double y);

// Single gamma-ratio form of the same multiplier.  Ill-conditioned near the
// removable singularity at y = 0 for the even family, so it serves as a
// cross-check away from y = 0 only.
Cplx n_multiplier_compact(const MultiplierSpec& spec, double y);

// |N_l^alpha(y)| / (|y|^alpha (|y|/2pi)^{(n-1)/2} / 2): the large-|y| ratio.
double asymptotic_ratio(const MultiplierSpec& spec, double y);

// M{psi}(iy) = int_0^inf t^{iy} psi(t) dt/t over a declared envelope support
// [t_min, t_max]: composite Simpson on a uniform ln t grid plus the boundary
// regularization term psi(t_min) t_min^{iy} / (iy) (the oscillatory-limit
// value of the left stub).  Probes psi beyond t_max and throws
// std::runtime_error when the declared envelope is violated.
Cplx mellin_numeric(const std::function<Cplx(double)>& psi, double y,
                    double t_min = 1e-10, double t_max = 60.0,
                    int grid_count = 0 /* 0 -> auto from |y| */);

// Residual |1/N_l(y) - 2|S^{n-2}| int_0^1 v^{-iy} w_l(v) dv| with
// N_l = N_l^{[l even >= 2]} and
//   w_l(v) = C_l^{(n-2)/2}(v) (1-v^2)^{(n-3)/2}            (l outside the even family)
//   w_l(v) = (n-1)^{-1} C_{l-1}^{n/2}(v) (1-v^2)^{(n-1)/2} / v   (l in the even family).
// The Mellin side is integrated in the logarithmic variable near 0 (where
// v^{-iy} oscillates in ln v) and by a trigonometric-substitution Gauss rule
// up to 1.
double multiplier_inverse_identity(int l, int n, double y);

// Exact integer check of the three operator identities on p(t) = t^k:
//   t^alpha d^{alpha-1} t^{-1} p = sum_m s(alpha,m) (t d)^{m-1} p
//   t^alpha d^alpha p           = sum_m s(alpha,m) (t d)^m p
//   t^{-1} d^{alpha-1} t^alpha p = sum_m [alpha,m] (d t)^{m-1} p
// Returns the max absolute coefficient difference (0 when the identities hold).
double operator_identity_check(int alpha, int k);

}  // namespace adz::mellin
