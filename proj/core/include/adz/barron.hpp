// Copyright 2026 the adz authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "adz/specfun.hpp"
#include "adz/spherical.hpp"

namespace adz::barron {

using specfun::Cplx;
using specfun::Quadrature1D;

enum class Parity { even, odd, mixed };

// A density phi in L1(R^n) whose Fourier transform is the test function.
// `decay_radius` P certifies int_{|u|>P} |u|^a |phi| < 1e-12 for a <= alpha_max,
// except for the algebraic-tail family where integrands beyond P are handled
// by closed-form tails instead (and only alpha = 0 is admissible).
struct SourceDensity {
  int n = 3;
  std::string catalog_id;
  bool radial = false;
  Parity parity = Parity::mixed;
  double decay_radius = 12.0;
  int alpha_max = 4;
  bool algebraic_tail = false;
  std::function<Cplx(const double*)> eval;   // phi(u), u in R^n
  std::function<Cplx(double)> radial_eval;   // phi as a function of |u| (radial only)
  // Angular mass of |phi| at radius rho: rho -> int_{S^{n-1}} |phi(rho w)| dw.
  // Provided in closed/reduced form for every catalog density so absolute-value
  // kinks never meet a sphere rule.
  std::function<double(double)> abs_angular;
};

// Catalog: "gaussian", "shifted_gaussian", "harmonic_gaussian", "radial_shell",
// "sigma".  Throws std::domain_error for unknown ids.
SourceDensity make_density(const std::string& id, int n);
std::vector<std::string> catalog_ids();

// f(x) = int phi(u) exp(i<u,x>) du, truncated at the decay radius (closed-form
// tails for the algebraic family at n = 3).
Cplx eval_f(const SourceDensity& d, const double* x);

// int |u|^alpha |phi(u)| du.  Throws std::domain_error when alpha exceeds the
// density's declared decay support.
double barron_norm(const SourceDensity& d, int alpha);

// h^alpha(theta, t) = 2^{-1} i^alpha int_0^inf rho^{n-1} phi°(theta rho) e^{i t rho} drho
//                   + 2^{-1} (-i)^alpha int_0^inf rho^{n-1} phi°(-theta rho) e^{-i t rho} drho,
// phi° = |.|^alpha phi.
Cplx h_profile(const SourceDensity& d, int alpha, const double* theta, double t);

// Zonal decomposition engine: caches the radial x sphere product grid of the
// density once and serves all per-degree quantities from it.
class ZonalDecomposer {
 public:
  // resolution = 0 picks a sphere rule adequate for degrees up to l_max
  // against the catalog densities' angular content.
  ZonalDecomposer(SourceDensity d, int l_max, int resolution = 0);

  int l_max() const { return l_max_; }
  int dim() const { return d_.n; }
  const SourceDensity& density() const { return d_; }

  // f_l(theta, t) = (2 pi)^{n/2} i^l int phi(u) Z_l(theta, u/|u|)
  //                 J_{l+(n-2)/2}(t|u|) / (t|u|)^{(n-2)/2} du,  t > 0.
  Cplx piece_f(int l, const double* theta, double t) const;

  // alpha = 0: G_l(theta,t) = int phi(u) Z_l(theta, u/|u|) cis_l(t|u|) du;
  // alpha >= 1: h_l^alpha with phi° = |.|^alpha phi and phase shift alpha*pi/2.
  Cplx g_alpha(int l, int alpha, const double* theta, double t) const;

  // 2|S^{n-2}| int_0^1 G_l(theta, t v) C_l^{(n-2)/2}(v) (1-v^2)^{(n-3)/2} dv.
  Cplx f_from_g(int l, const double* theta, double t) const;

  // 2|S^{n-2}| int_0^1 G_l(theta, t v) (n-1)^{-1} C_{l-1}^{n/2}(v) (1-v^2)^{(n-1)/2} dv/v,
  // defined for even l >= 2.
  Cplx big_f_from_g(int l, const double* theta, double t) const;

  // F_l(theta, t) = -int_t^inf f_l(theta, v) dv / v, even l >= 2.  Truncated
  // adaptively; throws std::runtime_error when the tail fails to settle.
  Cplx tail_f(int l, const double* theta, double t) const;

 private:
  std::vector<Cplx> angular(int l, const double* theta) const;  // per-rho sphere sums

  SourceDensity d_;
  int l_max_ = 0;
  Quadrature1D rho_;
  spherical::SphereQuadrature sph_;
  std::vector<Cplx> phi_;  // density values, rho-major (rho index x sphere index)
};

// Single-shot convenience wrappers (each builds a decomposer sized for one l).
Cplx zonal_piece_f(const SourceDensity& d, int l, const double* theta, double t);
Cplx g_profile(const SourceDensity& d, int alpha, int l, const double* theta, double t);
Cplx tail_integral_F(const SourceDensity& d, int l, const double* theta, double t);

// Tabulated dual profile h^alpha over a sphere rule x uniform t-grid, plus the
// radial amplitude vectors that make node evaluations cheap.
struct DualProfile {
  SourceDensity source;
  int alpha = 0;
  double T = 8.0;
  spherical::SphereQuadrature theta_rule;
  std::vector<double> t_grid;          // uniform on [-T, T]
  std::vector<Cplx> table;             // node-major (node index x t index)
  std::vector<double> sup_per_theta;   // max_t |h(theta_j, .)| over the grid
  double norm_1_inf = 0.0;             // sum_j w_j sup_per_theta[j]
  double tail_ratio = 0.0;             // edge magnitude / peak magnitude

  std::vector<double> rho_nodes, rho_weights;
  std::vector<Cplx> amp_pos, amp_neg;  // node-major (node index x rho index)

  std::size_t nodes() const { return theta_rule.count(); }
  Cplx eval(const double* w, double t) const;      // closed form, any direction
  Cplx eval_node(std::size_t j, double t) const;   // cached amplitudes
  // Order-q profile at the j-th node (0 <= q <= alpha).  The cached
  // amplitudes carry rho^{n-1+alpha}, so lower orders divide the extra
  // radial powers back out; h^q is the q-th t-derivative of h^0.
  Cplx eval_node_order(std::size_t j, int order, double t) const;
};

// Builds the table (parallel over theta nodes).  T <= 0 picks the default
// 4 * (1 + decay scale of the profile in t).
DualProfile make_dual_profile(const SourceDensity& d, int alpha,
                              int sphere_resolution = 16, double T = 0.0,
                              int t_count = 2048, unsigned threads = 1);

// sum_j w_j sup_t |h(theta_j, .)|, the sup taken over the table grid plus one
// parabolic peak refinement per node so interior maxima (e.g. t = 0 on an
// even-count grid) are located well below the grid spacing.
double norm_1_inf(const DualProfile& profile);

}  // namespace adz::barron
