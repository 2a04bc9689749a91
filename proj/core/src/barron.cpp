// Copyright 2026 the adz authors
// SPDX-License-Identifier: Apache-2.0
#include "adz/barron.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include "adz/parallel.hpp"

namespace adz::barron {
namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr int kMaxDim = 8;

using specfun::Cplx;
using specfun::Quadrature1D;

// Radial rules use Gauss-Legendre panels of fixed width 2 up to the decay
// radius; `per_panel` is sized by the caller for the oscillation it must
// resolve (phase per panel is about 2*t for a kernel oscillating at rate t).
Quadrature1D rho_rule(double decay_radius, int per_panel) {
  const int panels = std::max(1, static_cast<int>(std::ceil(decay_radius / 2.0)));
  return specfun::gauss_legendre_panels(0.0, decay_radius, panels, per_panel);
}

int oscillation_nodes(double base, double rate) {
  const double capped = std::min(std::abs(rate), 200.0);
  return static_cast<int>(base + 2.0 * std::ceil(capped));
}

// (2 pi)^{n/2} J_{(n-2)/2}(z) / z^{(n-2)/2}; the z -> 0 limit is
// (2 pi)^{n/2} / (2^{(n-2)/2} Gamma(n/2)) = |S^{n-1}|.
double radial_kernel(int n, double z) {
  const double e = 0.5 * (n - 2);
  if (z < 1e-6) return specfun::sphere_area(n);
  return std::pow(2.0 * kPi, 0.5 * n) * specfun::bessel_j(e, z) / std::pow(z, e);
}

// J_{l+(n-2)/2}(z) / z^{(n-2)/2} with the series limit z^l / (2^nu Gamma(nu+1))
// below z = 1e-6 (nu = l + (n-2)/2).
double piece_kernel(int n, int l, double z) {
  const double e = 0.5 * (n - 2);
  const double nu = l + e;
  if (z < 1e-6) {
    return std::pow(z, l) / (std::pow(2.0, nu) * std::tgamma(nu + 1.0));
  }
  return specfun::bessel_j(nu, z) / std::pow(z, e);
}

int pick_resolution(int n, int target_degree) {
  return n == 2 ? target_degree + 1 : (target_degree + 2) / 2;
}

// Head-room for the angular content of the catalog densities: plane-wave
// factors e^{rho <w,e1>} with rho <= 13 have zonal coefficients below 1e-20
// beyond degree ~46.
constexpr int kCatalogContent = 46;

// Direct Fourier transform of the algebraic-tail density sigma: honest radial
// quadrature from the support edge plus (at n = 3) the exact sine-integral
// tail; at other n the truncation point is pushed far enough out that the
// remainder is below ~1e-4 absolute and the column stays informational.
Cplx sigma_f_direct(int n, double s) {
  if (s < 1e-12) return Cplx(specfun::sphere_area(n), 0.0);
  const double cut = (n == 3) ? 40.0 : (n == 2 ? 1500.0 : 600.0);
  const double width = std::min(2.0, kPi / s);
  const int panels = static_cast<int>(std::ceil((cut - 1.0) / width));
  const Quadrature1D q = specfun::gauss_legendre_panels(1.0, cut, panels, 8);
  double acc = 0.0;
  for (std::size_t i = 0; i < q.nodes.size(); ++i) {
    const double rho = q.nodes[i];
    acc += q.weights[i] * radial_kernel(n, rho * s) / (rho * rho);
  }
  if (n == 3) {
    const double z = cut * s;
    const double tail = 4.0 * kPi * s *
                        (std::sin(z) / (2.0 * z * z) + std::cos(z) / (2.0 * z) -
                         0.5 * (0.5 * kPi - specfun::sine_integral(z)));
    acc += tail;
  }
  return Cplx(acc, 0.0);
}

double default_profile_t(const SourceDensity& d) {
  if (d.algebraic_tail) return 40.0;
  if (d.catalog_id == "radial_shell") return 20.0;
  return 8.0;
}

int gj_count(double t, double decay_radius) {
  int c = 64 + 2 * static_cast<int>(0.4 * std::min(std::abs(t), 200.0) * decay_radius);
  if (c % 2) ++c;
  return c;
}

Cplx piece_eval(const Quadrature1D& rho, const std::vector<Cplx>& angular_sums,
                int n, int l, double t) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < rho.nodes.size(); ++i) {
    const double r = rho.nodes[i];
    const double k =
        rho.weights[i] * std::pow(r, n - 1) * piece_kernel(n, l, t * r);
    re += k * angular_sums[i].real();
    im += k * angular_sums[i].imag();
  }
  return std::pow(2.0 * kPi, 0.5 * n) * specfun::unit_power(l) * Cplx(re, im);
}

Cplx g_eval(const Quadrature1D& rho, const std::vector<Cplx>& angular_sums,
            int n, int l, int alpha, double t) {
  const double shift = 0.5 * kPi * alpha;
  Cplx acc(0.0, 0.0);
  for (std::size_t i = 0; i < rho.nodes.size(); ++i) {
    const double r = rho.nodes[i];
    const double w = rho.weights[i] * std::pow(r, n - 1 + alpha);
    acc += w * angular_sums[i] * specfun::cis_parity(l, t * r + shift);
  }
  return acc;
}

}  // namespace

SourceDensity make_density(const std::string& id, int n) {
  if (n < 2 || n > kMaxDim)
    throw std::domain_error("make_density: dimension must be in [2, 8]");
  SourceDensity d;
  d.n = n;
  d.catalog_id = id;
  if (id == "gaussian") {
    d.radial = true;
    d.parity = Parity::even;
    d.decay_radius = 12.0;
    d.alpha_max = 4;
    d.radial_eval = [](double rho) { return Cplx(std::exp(-0.5 * rho * rho), 0.0); };
    d.eval = [n](const double* u) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += u[k] * u[k];
      return Cplx(std::exp(-0.5 * s), 0.0);
    };
    d.abs_angular = [n](double rho) {
      return specfun::sphere_area(n) * std::exp(-0.5 * rho * rho);
    };
    return d;
  }
  if (id == "shifted_gaussian") {
    d.radial = false;
    d.parity = Parity::mixed;
    d.decay_radius = 13.0;
    d.alpha_max = 4;
    d.eval = [n](const double* u) {
      double s = (u[0] - 1.0) * (u[0] - 1.0);
      for (int k = 1; k < n; ++k) s += u[k] * u[k];
      return Cplx(std::exp(-0.5 * s), 0.0);
    };
    // int_S |phi(rho w)| dw = e^{-(rho^2+1)/2} |S^{n-2}| int e^{rho v} (1-v^2)^{(n-3)/2} dv.
    d.abs_angular = [n](double rho) {
      const Quadrature1D ring = specfun::gauss_jacobi(48, 0.5 * (n - 3));
      double acc = 0.0;
      for (std::size_t i = 0; i < ring.nodes.size(); ++i)
        acc += ring.weights[i] * std::exp(rho * ring.nodes[i]);
      return specfun::sphere_area(n - 1) * std::exp(-0.5 * (rho * rho + 1.0)) * acc;
    };
    return d;
  }
  if (id == "harmonic_gaussian") {
    d.radial = false;
    d.parity = Parity::odd;
    d.decay_radius = 13.0;
    d.alpha_max = 4;
    d.eval = [n](const double* u) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += u[k] * u[k];
      return Cplx(u[0] * std::exp(-0.5 * s), 0.0);
    };
    // int_S |v| (1-v^2)^{(n-3)/2} over the polar angle has the exact value
    // 2/(n-1), so the angular mass reduces in closed form.
    d.abs_angular = [n](double rho) {
      return specfun::sphere_area(n - 1) * (2.0 / (n - 1)) * rho *
             std::exp(-0.5 * rho * rho);
    };
    return d;
  }
  if (id == "radial_shell") {
    d.radial = true;
    d.parity = Parity::even;
    d.decay_radius = 6.0;
    d.alpha_max = 4;
    d.radial_eval = [](double rho) {
      const double c = rho - 2.0;
      return Cplx(std::exp(-8.0 * c * c), 0.0);
    };
    d.eval = [n](const double* u) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += u[k] * u[k];
      const double c = std::sqrt(s) - 2.0;
      return Cplx(std::exp(-8.0 * c * c), 0.0);
    };
    d.abs_angular = [n](double rho) {
      const double c = rho - 2.0;
      return specfun::sphere_area(n) * std::exp(-8.0 * c * c);
    };
    return d;
  }
  if (id == "sigma") {
    d.radial = true;
    d.parity = Parity::even;
    d.decay_radius = 1.0;  // support edge; integrals beyond it get exact tails
    d.alpha_max = 0;
    d.algebraic_tail = true;
    d.radial_eval = [n](double rho) {
      return Cplx(rho > 1.0 ? std::pow(rho, -(n + 1)) : 0.0, 0.0);
    };
    d.eval = [n](const double* u) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += u[k] * u[k];
      const double rho = std::sqrt(s);
      return Cplx(rho > 1.0 ? std::pow(rho, -(n + 1)) : 0.0, 0.0);
    };
    d.abs_angular = [n](double rho) {
      return rho > 1.0 ? specfun::sphere_area(n) * std::pow(rho, -(n + 1)) : 0.0;
    };
    return d;
  }
  throw std::domain_error("make_density: unknown catalog id '" + id + "'");
}

std::vector<std::string> catalog_ids() {
  return {"gaussian", "shifted_gaussian", "harmonic_gaussian", "radial_shell",
          "sigma"};
}

Cplx eval_f(const SourceDensity& d, const double* x) {
  const int n = d.n;
  double s2 = 0.0;
  for (int k = 0; k < n; ++k) s2 += x[k] * x[k];
  const double s = std::sqrt(s2);
  if (d.algebraic_tail) return sigma_f_direct(n, s);
  if (d.radial) {
    const Quadrature1D q = rho_rule(d.decay_radius, oscillation_nodes(16, s));
    Cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < q.nodes.size(); ++i) {
      const double rho = q.nodes[i];
      acc += q.weights[i] * std::pow(rho, n - 1) * d.radial_eval(rho) *
             radial_kernel(n, rho * s);
    }
    return acc;
  }
  const int degree =
      static_cast<int>(std::ceil(d.decay_radius * (s + 1.0))) + 30;
  const spherical::SphereQuadrature& sph =
      spherical::sphere_quadrature(n, pick_resolution(n, degree));
  const Quadrature1D q = rho_rule(d.decay_radius, oscillation_nodes(16, s));
  std::vector<double> dots(sph.count());
  for (std::size_t j = 0; j < sph.count(); ++j) {
    const double* w = sph.point(j);
    double dot = 0.0;
    for (int k = 0; k < n; ++k) dot += w[k] * x[k];
    dots[j] = dot;
  }
  Cplx acc(0.0, 0.0);
  double u[kMaxDim];
  for (std::size_t i = 0; i < q.nodes.size(); ++i) {
    const double rho = q.nodes[i];
    const double wr = q.weights[i] * std::pow(rho, n - 1);
    Cplx ring(0.0, 0.0);
    for (std::size_t j = 0; j < sph.count(); ++j) {
      const double* w = sph.point(j);
      for (int k = 0; k < n; ++k) u[k] = rho * w[k];
      const double phase = rho * dots[j];
      ring += sph.weights[j] * d.eval(u) * Cplx(std::cos(phase), std::sin(phase));
    }
    acc += wr * ring;
  }
  return acc;
}

double barron_norm(const SourceDensity& d, int alpha) {
  if (alpha < 0 || alpha > d.alpha_max)
    throw std::domain_error("barron_norm: alpha outside the declared decay support");
  if (d.algebraic_tail) {
    // The density vanishes below the support edge P and equals rho^{-n-1}
    // beyond it: int_P^inf rho^{n-1} rho^{-n-1} drho = 1/P exactly.
    return specfun::sphere_area(d.n) / d.decay_radius;
  }
  const Quadrature1D q = rho_rule(d.decay_radius, 40);
  double acc = 0.0;
  for (std::size_t i = 0; i < q.nodes.size(); ++i) {
    const double rho = q.nodes[i];
    acc += q.weights[i] * std::pow(rho, d.n - 1 + alpha) * d.abs_angular(rho);
  }
  return acc;
}

Cplx h_profile(const SourceDensity& d, int alpha, const double* theta, double t) {
  if (alpha < 0 || alpha > d.alpha_max)
    throw std::domain_error("h_profile: alpha outside the declared decay support");
  if (d.algebraic_tail) {
    // h(t) = int_1^inf rho^{-2} cos(t rho) drho = cos t - |t| (pi/2 - Si |t|),
    // independent of the dimension (the rho^{n-1} weight cancels exactly).
    const double at = std::abs(t);
    return Cplx(std::cos(at) - at * (0.5 * kPi - specfun::sine_integral(at)), 0.0);
  }
  const int n = d.n;
  const Quadrature1D q = rho_rule(d.decay_radius, oscillation_nodes(24, t));
  double u[kMaxDim];
  Cplx pos(0.0, 0.0), neg(0.0, 0.0);
  for (std::size_t i = 0; i < q.nodes.size(); ++i) {
    const double rho = q.nodes[i];
    const double w = q.weights[i] * std::pow(rho, n - 1 + alpha);
    const Cplx e(std::cos(t * rho), std::sin(t * rho));
    for (int k = 0; k < n; ++k) u[k] = rho * theta[k];
    pos += w * d.eval(u) * e;
    for (int k = 0; k < n; ++k) u[k] = -rho * theta[k];
    neg += w * d.eval(u) * std::conj(e);
  }
  const Cplx ip = specfun::unit_power(alpha);
  return 0.5 * (ip * pos + std::conj(ip) * neg);
}

ZonalDecomposer::ZonalDecomposer(SourceDensity d, int l_max, int resolution)
    : d_(std::move(d)), l_max_(l_max) {
  if (l_max_ < 0) throw std::domain_error("ZonalDecomposer: l_max >= 0 required");
  if (d_.algebraic_tail)
    throw std::domain_error(
        "ZonalDecomposer: algebraic-tail densities have no compact decay "
        "support; use the closed-form profile paths instead");
  const int res = resolution > 0
                      ? resolution
                      : pick_resolution(d_.n, l_max_ + kCatalogContent);
  sph_ = spherical::sphere_quadrature(d_.n, res);
  // per_panel 80 keeps the width-2 panels accurate for radial oscillation
  // rates (Bessel/cis frequencies) up to ~120.
  rho_ = rho_rule(d_.decay_radius, 80);
  const std::size_t cnt = sph_.count();
  phi_.resize(rho_.nodes.size() * cnt);
  double u[kMaxDim];
  for (std::size_t i = 0; i < rho_.nodes.size(); ++i) {
    const double rho = rho_.nodes[i];
    for (std::size_t j = 0; j < cnt; ++j) {
      const double* w = sph_.point(j);
      for (int k = 0; k < d_.n; ++k) u[k] = rho * w[k];
      phi_[i * cnt + j] = d_.eval(u);
    }
  }
}

std::vector<Cplx> ZonalDecomposer::angular(int l, const double* theta) const {
  const std::size_t cnt = sph_.count();
  std::vector<double> wz(cnt);
  for (std::size_t j = 0; j < cnt; ++j) {
    const double* w = sph_.point(j);
    double dot = 0.0;
    for (int k = 0; k < d_.n; ++k) dot += w[k] * theta[k];
    wz[j] = sph_.weights[j] * spherical::zonal(l, d_.n, dot);
  }
  std::vector<Cplx> out(rho_.nodes.size(), Cplx(0.0, 0.0));
  for (std::size_t i = 0; i < rho_.nodes.size(); ++i) {
    double re = 0.0, im = 0.0;
    const Cplx* row = phi_.data() + i * cnt;
    for (std::size_t j = 0; j < cnt; ++j) {
      re += row[j].real() * wz[j];
      im += row[j].imag() * wz[j];
    }
    out[i] = Cplx(re, im);
  }
  return out;
}

Cplx ZonalDecomposer::piece_f(int l, const double* theta, double t) const {
  if (t <= 0.0) throw std::domain_error("piece_f: t > 0 required");
  if (l < 0 || l > l_max_) throw std::domain_error("piece_f: l out of range");
  return piece_eval(rho_, angular(l, theta), d_.n, l, t);
}

Cplx ZonalDecomposer::g_alpha(int l, int alpha, const double* theta, double t) const {
  if (l < 0 || l > l_max_) throw std::domain_error("g_alpha: l out of range");
  if (alpha < 0 || alpha > d_.alpha_max)
    throw std::domain_error("g_alpha: alpha outside the declared decay support");
  return g_eval(rho_, angular(l, theta), d_.n, l, alpha, t);
}

Cplx ZonalDecomposer::f_from_g(int l, const double* theta, double t) const {
  if (l < 0 || l > l_max_) throw std::domain_error("f_from_g: l out of range");
  const std::vector<Cplx> sums = angular(l, theta);
  const int n = d_.n;
  const Quadrature1D gj =
      specfun::gauss_jacobi(gj_count(t, d_.decay_radius), 0.5 * (n - 3));
  const double lam = 0.5 * (n - 2);
  // The integrand G_l(theta, t v) C_l(v) is even by the parity law, so the
  // [0,1] integral with prefactor 2|S^{n-2}| equals the full-interval one
  // with prefactor |S^{n-2}|.
  Cplx acc(0.0, 0.0);
  for (std::size_t i = 0; i < gj.nodes.size(); ++i) {
    const double v = gj.nodes[i];
    acc += gj.weights[i] * specfun::gegenbauer(l, lam, v) *
           g_eval(rho_, sums, n, l, 0, t * v);
  }
  return specfun::sphere_area(n - 1) * acc;
}

Cplx ZonalDecomposer::big_f_from_g(int l, const double* theta, double t) const {
  if (l < 2 || l % 2 != 0)
    throw std::domain_error("big_f_from_g: even l >= 2 required");
  if (l > l_max_) throw std::domain_error("big_f_from_g: l out of range");
  const std::vector<Cplx> sums = angular(l, theta);
  const int n = d_.n;
  const Quadrature1D gj =
      specfun::gauss_jacobi(gj_count(t, d_.decay_radius), 0.5 * (n - 1));
  // Weight (n-1)^{-1} C_{l-1}^{n/2}(v) / v; C_{l-1} is odd so the quotient is
  // a polynomial and the full integrand is even (same halving as f_from_g).
  // Even node counts keep v = 0 off the rule.
  Cplx acc(0.0, 0.0);
  for (std::size_t i = 0; i < gj.nodes.size(); ++i) {
    const double v = gj.nodes[i];
    acc += gj.weights[i] * specfun::gegenbauer(l - 1, 0.5 * n, v) / v *
           g_eval(rho_, sums, n, l, 0, t * v);
  }
  return specfun::sphere_area(n - 1) / (n - 1.0) * acc;
}

Cplx ZonalDecomposer::tail_f(int l, const double* theta, double t) const {
  if (l < 2 || l % 2 != 0)
    throw std::domain_error("tail_f: even l >= 2 required");
  if (l > l_max_) throw std::domain_error("tail_f: l out of range");
  if (t <= 0.0) throw std::domain_error("tail_f: t > 0 required");
  const std::vector<Cplx> sums = angular(l, theta);
  const Quadrature1D unit = specfun::gauss_legendre_panels(0.0, 1.0, 1, 16);
  Cplx acc(0.0, 0.0);
  int calm = 0;
  for (double v0 = t; v0 < t + 80.0; v0 += 1.0) {
    Cplx inc(0.0, 0.0);
    for (std::size_t k = 0; k < unit.nodes.size(); ++k) {
      const double v = v0 + unit.nodes[k];
      inc += unit.weights[k] * piece_eval(rho_, sums, d_.n, l, v) / v;
    }
    acc += inc;
    if (std::abs(inc) < 1e-10 * (1.0 + std::abs(acc))) {
      if (++calm >= 2) return -acc;
    } else {
      calm = 0;
    }
  }
  throw std::runtime_error("tail_f: tail integral failed to settle");
}

Cplx zonal_piece_f(const SourceDensity& d, int l, const double* theta, double t) {
  return ZonalDecomposer(d, l).piece_f(l, theta, t);
}

Cplx g_profile(const SourceDensity& d, int alpha, int l, const double* theta,
               double t) {
  return ZonalDecomposer(d, l).g_alpha(l, alpha, theta, t);
}

Cplx tail_integral_F(const SourceDensity& d, int l, const double* theta, double t) {
  return ZonalDecomposer(d, l).tail_f(l, theta, t);
}

Cplx DualProfile::eval(const double* w, double t) const {
  if (source.algebraic_tail) return h_profile(source, alpha, w, t);
  const int n = source.n;
  double u[kMaxDim];
  Cplx pos(0.0, 0.0), neg(0.0, 0.0);
  for (std::size_t i = 0; i < rho_nodes.size(); ++i) {
    const double rho = rho_nodes[i];
    const double wgt = rho_weights[i] * std::pow(rho, n - 1 + alpha);
    const Cplx e(std::cos(t * rho), std::sin(t * rho));
    for (int k = 0; k < n; ++k) u[k] = rho * w[k];
    pos += wgt * source.eval(u) * e;
    for (int k = 0; k < n; ++k) u[k] = -rho * w[k];
    neg += wgt * source.eval(u) * std::conj(e);
  }
  const Cplx ip = specfun::unit_power(alpha);
  return 0.5 * (ip * pos + std::conj(ip) * neg);
}

Cplx DualProfile::eval_node(std::size_t j, double t) const {
  if (source.algebraic_tail)
    return h_profile(source, alpha, theta_rule.point(j), t);
  const std::size_t nr = rho_nodes.size();
  const Cplx* ap = amp_pos.data() + j * nr;
  const Cplx* an = amp_neg.data() + j * nr;
  Cplx pos(0.0, 0.0), neg(0.0, 0.0);
  for (std::size_t i = 0; i < nr; ++i) {
    const Cplx e(std::cos(t * rho_nodes[i]), std::sin(t * rho_nodes[i]));
    pos += ap[i] * e;
    neg += an[i] * std::conj(e);
  }
  const Cplx ip = specfun::unit_power(alpha);
  return 0.5 * (ip * pos + std::conj(ip) * neg);
}

Cplx DualProfile::eval_node_order(std::size_t j, int order, double t) const {
  if (order < 0 || order > alpha)
    throw std::domain_error("eval_node_order: 0 <= order <= alpha required");
  if (order == alpha) return eval_node(j, t);
  if (source.algebraic_tail)
    return h_profile(source, order, theta_rule.point(j), t);
  const std::size_t nr = rho_nodes.size();
  const Cplx* ap = amp_pos.data() + j * nr;
  const Cplx* an = amp_neg.data() + j * nr;
  Cplx pos(0.0, 0.0), neg(0.0, 0.0);
  for (std::size_t i = 0; i < nr; ++i) {
    const double scale = std::pow(rho_nodes[i], order - alpha);
    const Cplx e(std::cos(t * rho_nodes[i]), std::sin(t * rho_nodes[i]));
    pos += scale * ap[i] * e;
    neg += scale * an[i] * std::conj(e);
  }
  const Cplx ip = specfun::unit_power(order);
  return 0.5 * (ip * pos + std::conj(ip) * neg);
}

DualProfile make_dual_profile(const SourceDensity& d, int alpha,
                              int sphere_resolution, double T, int t_count,
                              unsigned threads) {
  if (alpha < 0 || alpha > d.alpha_max)
    throw std::domain_error(
        "make_dual_profile: alpha outside the declared decay support");
  if (t_count < 9)
    throw std::domain_error("make_dual_profile: t_count >= 9 required");
  DualProfile p;
  p.source = d;
  p.alpha = alpha;
  p.T = T > 0.0 ? T : default_profile_t(d);
  p.theta_rule = spherical::sphere_quadrature(d.n, sphere_resolution);
  p.t_grid.resize(t_count);
  const double step = 2.0 * p.T / (t_count - 1);
  for (int k = 0; k < t_count; ++k) p.t_grid[k] = -p.T + step * k;
  const std::size_t cnt = p.theta_rule.count();
  p.table.assign(cnt * static_cast<std::size_t>(t_count), Cplx(0.0, 0.0));

  if (d.algebraic_tail) {
    // The profile is radial and has a closed form; tabulate one row and copy.
    std::vector<Cplx> row(t_count);
    for (int k = 0; k < t_count; ++k)
      row[k] = h_profile(d, alpha, p.theta_rule.point(0), p.t_grid[k]);
    for (std::size_t j = 0; j < cnt; ++j)
      std::copy(row.begin(), row.end(),
                p.table.begin() + j * static_cast<std::size_t>(t_count));
  } else {
    const Quadrature1D q =
        rho_rule(d.decay_radius, oscillation_nodes(24, p.T));
    p.rho_nodes = q.nodes;
    p.rho_weights = q.weights;
    const std::size_t nr = q.nodes.size();
    p.amp_pos.assign(cnt * nr, Cplx(0.0, 0.0));
    p.amp_neg.assign(cnt * nr, Cplx(0.0, 0.0));
    const int n = d.n;
    adz::parallel_for(cnt, threads, [&](std::size_t j) {
      double u[kMaxDim];
      const double* w = p.theta_rule.point(j);
      Cplx* ap = p.amp_pos.data() + j * nr;
      Cplx* an = p.amp_neg.data() + j * nr;
      for (std::size_t i = 0; i < nr; ++i) {
        const double rho = q.nodes[i];
        const double wgt = q.weights[i] * std::pow(rho, n - 1 + alpha);
        for (int k = 0; k < n; ++k) u[k] = rho * w[k];
        ap[i] = wgt * d.eval(u);
        for (int k = 0; k < n; ++k) u[k] = -rho * w[k];
        an[i] = wgt * d.eval(u);
      }
      // Walk the uniform t-grid with the exact one-step phase recurrence,
      // re-seeding every 128 steps to keep accumulated drift near rounding.
      const Cplx ip = specfun::unit_power(alpha);
      const Cplx im = std::conj(ip);
      std::vector<Cplx> phase(nr), stride(nr);
      for (std::size_t i = 0; i < nr; ++i)
        stride[i] = Cplx(std::cos(step * q.nodes[i]), std::sin(step * q.nodes[i]));
      Cplx* row = p.table.data() + j * static_cast<std::size_t>(t_count);
      for (int k = 0; k < t_count; ++k) {
        if (k % 128 == 0) {
          const double t = p.t_grid[k];
          for (std::size_t i = 0; i < nr; ++i)
            phase[i] = Cplx(std::cos(t * q.nodes[i]), std::sin(t * q.nodes[i]));
        }
        Cplx pos(0.0, 0.0), neg(0.0, 0.0);
        for (std::size_t i = 0; i < nr; ++i) {
          pos += ap[i] * phase[i];
          neg += an[i] * std::conj(phase[i]);
          phase[i] *= stride[i];
        }
        row[k] = 0.5 * (ip * pos + im * neg);
      }
    });
  }

  p.sup_per_theta.assign(cnt, 0.0);
  for (std::size_t j = 0; j < cnt; ++j) {
    const Cplx* row = p.table.data() + j * static_cast<std::size_t>(t_count);
    double best = 0.0;
    for (int k = 0; k < t_count; ++k) best = std::max(best, std::abs(row[k]));
    p.sup_per_theta[j] = best;
  }
  p.norm_1_inf = norm_1_inf(p);
  double peak = 0.0, edge = 0.0;
  for (std::size_t j = 0; j < cnt; ++j) {
    const Cplx* row = p.table.data() + j * static_cast<std::size_t>(t_count);
    peak = std::max(peak, p.sup_per_theta[j]);
    edge = std::max({edge, std::abs(row[0]), std::abs(row[t_count - 1])});
  }
  p.tail_ratio = peak > 0.0 ? edge / peak : 0.0;
  return p;
}

double norm_1_inf(const DualProfile& profile) {
  const std::size_t cnt = profile.theta_rule.count();
  const std::size_t tc = profile.t_grid.size();
  double acc = 0.0;
  for (std::size_t j = 0; j < cnt; ++j) {
    const Cplx* row = profile.table.data() + j * tc;
    std::size_t best = 0;
    double bv = 0.0;
    for (std::size_t k = 0; k < tc; ++k) {
      const double a = std::abs(row[k]);
      if (a > bv) {
        bv = a;
        best = k;
      }
    }
    // One parabolic refinement around an interior grid argmax recovers peaks
    // that fall between grid points (the grid has even count, so t = 0 is
    // never a node).
    if (best > 0 && best + 1 < tc) {
      const double ym = std::abs(row[best - 1]);
      const double y0 = bv;
      const double yp = std::abs(row[best + 1]);
      const double denom = ym - 2.0 * y0 + yp;
      if (denom < 0.0) {
        const double off = 0.5 * (ym - yp) / denom;
        if (std::abs(off) <= 1.0) {
          const double h = profile.t_grid[1] - profile.t_grid[0];
          const double tstar = profile.t_grid[best] + off * h;
          const double refined =
              std::abs(profile.source.algebraic_tail
                           ? h_profile(profile.source, profile.alpha,
                                       profile.theta_rule.point(j), tstar)
                           : profile.eval_node(j, tstar));
          bv = std::max(bv, refined);
        }
      }
    }
    acc += profile.theta_rule.weights[j] * bv;
  }
  return acc;
}

}  // namespace adz::barron
