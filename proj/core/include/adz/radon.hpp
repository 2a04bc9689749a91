// Copyright 2026 the adz authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "adz/barron.hpp"
#include "adz/specfun.hpp"
#include "adz/spherical.hpp"

namespace adz::radon {

using specfun::Cplx;

// delta^{(-alpha)}(b): the (alpha-1)-fold antiderivative of the Heaviside
// step.  alpha = 1 is the step itself with the value at 0 fixed to 0;
// alpha >= 2 gives b_+^{alpha-1}/(alpha-1)!.  Nonnegative and nondecreasing.
double activation(int alpha, double b);

// R*{h}(x) = int h(w, <w,x>) dw over the sphere rule.
Cplx dual_radon(const std::function<Cplx(const double*, double)>& h,
                const double* x, const spherical::SphereQuadrature& rule);

// Reconstruction integral over biases restricted to [-r, r]:
//   int [ int h^alpha(w, b) delta^{(-alpha)}(<w,x> - b) [-r <= b] db
//         + sum_{q<alpha} h^q(w, -r) (<w,x> + r)^q / q! ] dw.
// The second sum is the boundary layer at b = -r: truncating the bias range
// turns the q < alpha derivative orders into point masses there (Taylor's
// theorem with integral remainder, expanded at -r), and without them the
// truncated integral reproduces h^0(w, <w,x>) only up to its Taylor
// polynomial at -r.  Product quadrature over the profile's sphere rule and
// composite Gauss-Legendre in b on [-r, min(<w,x>, r)] (the activation
// vanishes for b > <w,x>, and for alpha <= 2 the integrand is not smooth
// there, so the b-range always ends at that break).  `b_points` is the node
// budget the full interval [-r, r] would receive.
Cplx nalpha_eval(const barron::DualProfile& h_alpha, int alpha, double r,
                 const double* x, int b_points = 128);

// h°(t) = [t <= r] int h_l(b) [-r <= b] delta^{(-alpha)}(t - b) db, i.e. the
// truncated convolution over b in [-r, t] with no boundary layer.
Cplx convolve_activation(const std::function<Cplx(double)>& h_l, int alpha,
                         double r, double t);

// Truncated convolution plus its boundary layer:
//   convolve_activation(h_l_alpha, alpha, r, t)
//   + [|t| <= r] sum_{q<alpha} taylor_at_left[q] (t + r)^q / q!
// where taylor_at_left[q] is the order-q profile value at -r.  With those
// coefficients the result equals the order-0 profile on [-r, r] exactly
// (up to quadrature error).
Cplx truncated_profile(const std::function<Cplx(double)>& h_l_alpha,
                       const std::vector<Cplx>& taylor_at_left, int alpha,
                       double r, double t);

}  // namespace adz::radon
