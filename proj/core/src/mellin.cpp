// Copyright 2026 the adz authors
// SPDX-License-Identifier: Apache-2.0
#include "adz/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "adz/specfun.hpp"

namespace adz::mellin {
namespace {

constexpr double kPi = 3.14159265358979323846;

using specfun::gauss_legendre_panels;
using specfun::gegenbauer;
using specfun::log_gamma_complex;
using specfun::pochhammer;
using specfun::Quadrature1D;

void require(bool ok, const char* message) {
  if (!ok) throw std::domain_error(message);
}

double parity_sign(int k) { return k % 2 == 0 ? 1.0 : -1.0; }

}  // namespace

bool admissible(const MultiplierSpec& spec) {
  if (spec.l < 0 || spec.n < 2 || spec.alpha < 0) return false;
  if (even_family(spec.l)) return spec.alpha >= 1;
  return true;
}

Cplx n_multiplier(const MultiplierSpec& spec, double y) {
  require(admissible(spec), "n_multiplier: inadmissible (l, alpha, n)");
  const int l = spec.l;
  const int alpha = spec.alpha;
  const double n = static_cast<double>(spec.n);
  const double pi_pow = std::pow(kPi, 0.5 * (n - 1.0));

  if (l == 0) {
    const Cplx ratio = std::exp(log_gamma_complex(Cplx(0.5 * n, -0.5 * y)) -
                                log_gamma_complex(Cplx(0.5, -0.5 * y)));
    return ratio * parity_sign(alpha) * pochhammer(Cplx(0.0, y), alpha) /
           (2.0 * pi_pow);
  }
  if (l % 2 == 1) {
    const Cplx ratio = std::exp(log_gamma_complex(Cplx(0.5 * (n + l), -0.5 * y)) -
                                log_gamma_complex(Cplx(1.0, -0.5 * y)));
    const int q = (l - 1) / 2;
    return ratio * parity_sign(alpha) * parity_sign(q) *
           pochhammer(Cplx(0.0, y), alpha) /
           (2.0 * pi_pow * pochhammer(Cplx(0.5, 0.5 * y), q));
  }
  // Even degrees l >= 2: the representation with one derivative already
  // integrated by parts, total at y = 0 (no Pochhammer factor vanishes).
  const Cplx ratio = std::exp(log_gamma_complex(Cplx(0.5 * (n + l), -0.5 * y)) -
                              log_gamma_complex(Cplx(0.5, -0.5 * y)));
  const int q = (l - 2) / 2;
  return ratio * parity_sign(alpha - 1) * parity_sign(q) *
         pochhammer(Cplx(1.0, y), alpha - 1) /
         (pi_pow * pochhammer(Cplx(1.0, 0.5 * y), q));
}

Cplx n_multiplier_compact(const MultiplierSpec& spec, double y) {
  require(admissible(spec), "n_multiplier_compact: inadmissible (l, alpha, n)");
  const int l = spec.l;
  const int alpha = spec.alpha;
  const double n = static_cast<double>(spec.n);
  const Cplx ln =
      log_gamma_complex(Cplx(0.5 * (n + l), -0.5 * y)) +
      log_gamma_complex(Cplx(0.5 * (2.0 - l), -0.5 * y)) +
      log_gamma_complex(Cplx(1.0, -y)) -
      log_gamma_complex(Cplx(1.0, -0.5 * y)) -
      log_gamma_complex(Cplx(0.5, -0.5 * y)) -
      log_gamma_complex(Cplx(1.0 - alpha, -y));
  return std::exp(ln) / (2.0 * std::pow(kPi, 0.5 * (n - 1.0)));
}

double asymptotic_ratio(const MultiplierSpec& spec, double y) {
  require(y != 0.0, "asymptotic_ratio: y must be nonzero");
  const double ay = std::abs(y);
  const double envelope = 0.5 * std::pow(ay, spec.alpha) *
                          std::pow(ay / (2.0 * kPi), 0.5 * (spec.n - 1.0));
  return std::abs(n_multiplier(spec, y)) / envelope;
}

Cplx mellin_numeric(const std::function<Cplx(double)>& psi, double y,
                    double t_min, double t_max, int grid_count) {
  require(t_min > 0.0, "mellin_numeric: t_min must be > 0");
  require(t_max > t_min, "mellin_numeric: t_max must exceed t_min");
  const double lo = std::log(t_min);
  const double hi = std::log(t_max);
  const double range = hi - lo;

  int count = grid_count;
  if (count <= 0)
    count = static_cast<int>(range * (300.0 + 60.0 * std::abs(y)));
  count = std::max(count, 8001);
  count = std::min(count, 400001);
  if (count % 2 == 0) ++count;  // composite Simpson needs an even panel count

  // M{psi}(iy) = int psi(e^u) e^{iyu} du in u = ln t.
  const double h = range / static_cast<double>(count - 1);
  Cplx sum(0.0, 0.0);
  for (int i = 0; i < count; ++i) {
    const double u = lo + h * static_cast<double>(i);
    const double w = (i == 0 || i == count - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    sum += w * psi(std::exp(u)) * Cplx(std::cos(y * u), std::sin(y * u));
  }
  Cplx result = sum * (h / 3.0);

  // Left stub int_0^{t_min} psi t^{iy-1} dt in the oscillatory limit with
  // psi frozen at its boundary value.
  if (y != 0.0) {
    const double phase = y * lo;
    result += psi(t_min) * Cplx(std::cos(phase), std::sin(phase)) / Cplx(0.0, y);
  }

  // The declared support must actually contain the mass: probe beyond t_max
  // and reject when a one-decade tail increment would be visible.
  const double scale = 1.0 + std::abs(result);
  for (const double factor : {1.5, 2.0, 5.0, 10.0}) {
    if (std::abs(psi(factor * t_max)) * std::log(10.0) > 1e-8 * scale)
      throw std::runtime_error(
          "mellin_numeric: envelope violated (psi not negligible beyond t_max)");
  }
  return result;
}

double multiplier_inverse_identity(int l, int n, double y) {
  require(l >= 0, "multiplier_inverse_identity: l must be >= 0");
  require(n >= 2, "multiplier_inverse_identity: n must be >= 2");
  const bool even = even_family(l);

  MultiplierSpec spec;
  spec.l = l;
  spec.alpha = even ? 1 : 0;
  spec.n = n;
  const Cplx lhs = 1.0 / n_multiplier(spec, y);

  const auto weight = [&](double v) -> double {
    if (even)
      return gegenbauer(l - 1, 0.5 * n, v) *
             std::pow(1.0 - v * v, 0.5 * (n - 1.0)) /
             (static_cast<double>(n - 1) * v);
    return gegenbauer(l, 0.5 * (n - 2.0), v) * std::pow(1.0 - v * v, 0.5 * (n - 3.0));
  };

  // Segment (0, 1/2] in u = ln v: v^{-iy} oscillates uniformly in u and the
  // integrand decays like e^u (even family: e^{2u} as C_{l-1}(v)/v -> c v).
  const double cut = 0.5;
  const double u_hi = std::log(cut);
  const double u_lo = u_hi - 46.0;  // e^{-46} tail below double precision
  const int per_panel = 12 + std::min(68, static_cast<int>(1.5 * std::abs(y)));
  const Quadrature1D log_rule = gauss_legendre_panels(u_lo, u_hi, 47, per_panel);
  Cplx integral(0.0, 0.0);
  for (std::size_t i = 0; i < log_rule.nodes.size(); ++i) {
    const double u = log_rule.nodes[i];
    const double v = std::exp(u);
    const double phase = -y * u;
    integral += log_rule.weights[i] * v * weight(v) *
                Cplx(std::cos(phase), std::sin(phase));
  }

  // Segment [1/2, 1] with v = sin(phi): dv absorbs one cosine, leaving the
  // integer powers cos^{n-2} (standard) / cos^n (even family), so the
  // integrand stays smooth at v = 1 even for n = 2 and never forms 1 - v^2.
  const auto trig_integrand = [&](double phi) -> double {
    const double v = std::sin(phi);
    const double c = std::cos(phi);
    if (even)
      return gegenbauer(l - 1, 0.5 * n, v) * std::pow(c, n) /
             (static_cast<double>(n - 1) * v);
    return gegenbauer(l, 0.5 * (n - 2.0), v) * std::pow(c, n - 2);
  };
  const Quadrature1D trig_rule =
      gauss_legendre_panels(std::asin(cut), 0.5 * kPi, 4, 16 + std::min(48, static_cast<int>(std::abs(y))));
  for (std::size_t i = 0; i < trig_rule.nodes.size(); ++i) {
    const double phi = trig_rule.nodes[i];
    const double phase = -y * std::log(std::sin(phi));
    integral += trig_rule.weights[i] * trig_integrand(phi) *
                Cplx(std::cos(phase), std::sin(phase));
  }

  const Cplx rhs = 2.0 * specfun::sphere_area(n - 1) * integral;
  return std::abs(lhs - rhs);
}

double operator_identity_check(int alpha, int k) {
  require(alpha >= 1 && alpha <= 8, "operator_identity_check: 1 <= alpha <= 8");
  require(k >= 0 && k <= 16, "operator_identity_check: 0 <= k <= 16");

  const auto ipow = [](std::int64_t base, int exp) {
    std::int64_t out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
  };

  // t^alpha d^{alpha-1} t^{-1} t^k = prod_{j=1}^{alpha-1} (k-j) t^k
  //                               = sum_m s(alpha,m) (t d)^{m-1} t^k.
  std::int64_t lhs1 = 1;
  for (int j = 1; j <= alpha - 1; ++j) lhs1 *= static_cast<std::int64_t>(k - j);
  std::int64_t rhs1 = 0;
  for (int m = 1; m <= alpha; ++m)
    rhs1 += specfun::stirling_first(alpha, m, true) * ipow(k, m - 1);

  // t^alpha d^alpha t^k = prod_{j=0}^{alpha-1} (k-j) t^k
  //                     = sum_m s(alpha,m) (t d)^m t^k.
  std::int64_t lhs2 = 1;
  for (int j = 0; j <= alpha - 1; ++j) lhs2 *= static_cast<std::int64_t>(k - j);
  std::int64_t rhs2 = 0;
  for (int m = 1; m <= alpha; ++m)
    rhs2 += specfun::stirling_first(alpha, m, true) * ipow(k, m);

  // t^{-1} d^{alpha-1} t^alpha t^k = prod_{j=2}^{alpha} (k+j) t^k
  //                               = sum_m [alpha, m] (d t)^{m-1} t^k.
  std::int64_t lhs3 = 1;
  for (int j = 2; j <= alpha; ++j) lhs3 *= static_cast<std::int64_t>(k + j);
  std::int64_t rhs3 = 0;
  for (int m = 1; m <= alpha; ++m)
    rhs3 += specfun::stirling_first(alpha, m, false) * ipow(k + 1, m - 1);

  const std::int64_t worst = std::max({std::llabs(lhs1 - rhs1),
                                       std::llabs(lhs2 - rhs2),
                                       std::llabs(lhs3 - rhs3)});
  return static_cast<double>(worst);
}

}  // namespace adz::mellin
