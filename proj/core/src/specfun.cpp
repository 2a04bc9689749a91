// Copyright 2026 the adz authors
// SPDX-License-Identifier: Apache-2.0
#include "adz/specfun.hpp"

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace adz::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kEulerGamma = 0.57721566490153286060651209;

// Overflow-safe ln sin(pi z).  Branch offsets of 2 pi i are irrelevant to
// callers that exponentiate.
Cplx log_sin_pi(Cplx z) {
  const Cplx w = kPi * z;
  const Cplx I(0.0, 1.0);
  const double im = w.imag();
  if (std::abs(im) < 20.0) return std::log(std::sin(w));
  if (im > 0.0)
    return -I * w + std::log(1.0 - std::exp(2.0 * I * w)) - std::log(2.0) + I * (kPi / 2.0);
  return I * w + std::log(1.0 - std::exp(-2.0 * I * w)) - std::log(2.0) - I * (kPi / 2.0);
}

}  // namespace

Cplx log_gamma_complex(Cplx z) {
  if (z.imag() == 0.0 && z.real() <= 0.5 &&
      std::abs(z.real() - std::round(z.real())) < 1e-14)
    throw std::domain_error("log_gamma_complex: pole at nonpositive integer");
  if (z.real() < 0.5)
    return std::log(kPi) - log_sin_pi(z) - log_gamma_complex(1.0 - z);

  // Lanczos, g = 7, 9 terms (Godfrey's coefficients).
  static const double c[9] = {
      0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,    12.507343278686905,
      -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};
  const Cplx zz = z - 1.0;
  Cplx a = c[0];
  for (int i = 1; i < 9; ++i) a += c[i] / (zz + static_cast<double>(i));
  const Cplx t = zz + 7.5;
  return 0.5 * std::log(2.0 * kPi) + (zz + 0.5) * std::log(t) - t + std::log(a);
}

double gegenbauer(int l, double lambda, double v) {
  if (l < 0) throw std::domain_error("gegenbauer: l >= 0 required");
  if (l == 0) return 1.0;
  if (lambda == 0.0) {
    // Chebyshev T_l, already 1 at v = 1.
    double tm = 1.0, tc = v;
    for (int k = 2; k <= l; ++k) {
      double tn = 2.0 * v * tc - tm;
      tm = tc;
      tc = tn;
    }
    return tc;
  }
  // Three-term recurrence for the conventional normalization, then divide by
  // the value at 1, C~_l(1) = (2 lambda)_l / l!.
  auto raw = [&](double x) {
    double pm = 1.0, pc = 2.0 * lambda * x;
    for (int k = 2; k <= l; ++k) {
      double pn = (2.0 * (k - 1.0 + lambda) * x * pc - (k - 2.0 + 2.0 * lambda) * pm) / k;
      pm = pc;
      pc = pn;
    }
    return pc;
  };
  double at1 = 1.0;
  for (int k = 0; k < l; ++k) at1 *= (2.0 * lambda + k) / (k + 1.0);
  return raw(v) / at1;
}

namespace {

double bessel_series(double nu, double x) {
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  const double half = 0.5 * x;
  double term = std::exp(nu * std::log(half) - std::lgamma(nu + 1.0));
  double sum = term;
  const double m = -half * half;
  for (int k = 1; k < 500; ++k) {
    term *= m / (k * (nu + k));
    sum += term;
    if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300)) break;
  }
  return sum;
}

// Hankel asymptotic expansion, reliable for x > 12 and small nu (used only
// to seed the integer-order recurrences with J_0, J_1).
double bessel_hankel(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  double p = 1.0, q = 0.0, ak = 1.0, prev = 1e300;
  for (int k = 1; k < 40; ++k) {
    ak *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (k * 8.0 * x);
    if (std::abs(ak) > prev) break;
    prev = std::abs(ak);
    switch (k % 4) {
      case 1: q += ak; break;
      case 2: p -= ak; break;
      case 3: q -= ak; break;
      default: p += ak; break;
    }
    if (std::abs(ak) < 1e-17) break;
  }
  const double chi = x - (0.5 * nu + 0.25) * kPi;
  return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

// Spherical Bessel j_m(x): upward recurrence (x > m+1, seeded by the exact
// j_0, j_1) or Miller's downward recurrence normalized by j_0 / j_1.
double sph_jn(int m, double x) {
  const double j0 = std::sin(x) / x;
  if (m == 0) return j0;
  const double j1 = j0 / x - std::cos(x) / x;
  if (m == 1) return j1;
  if (x > m + 1.0) {
    double a = j0, b = j1;
    for (int k = 1; k < m; ++k) {
      const double c = (2.0 * k + 1.0) / x * b - a;
      a = b;
      b = c;
    }
    return b;
  }
  const int K = m + 16 + static_cast<int>(std::sqrt(40.0 * m));
  double fp = 0.0, fc = 1e-30, fm = 0.0;
  for (int k = K; k >= 1; --k) {
    const double fn = (2.0 * k + 1.0) / x * fc - fp;
    fp = fc;
    fc = fn;
    if (k - 1 == m) fm = fc;
    if (std::abs(fc) > 1e250) {
      fc *= 1e-250;
      fp *= 1e-250;
      fm *= 1e-250;
    }
  }
  return (std::abs(j0) >= std::abs(j1)) ? fm * (j0 / fc) : fm * (j1 / fp);
}

// Integer-order J_m: upward recurrence for x > m+1, otherwise Miller's
// algorithm with the normalization J_0 + 2 J_2 + 2 J_4 + ... = 1.
double bessel_int(int m, double x) {
  const double J0 = (x <= 12.0) ? bessel_series(0.0, x) : bessel_hankel(0.0, x);
  if (m == 0) return J0;
  const double J1 = (x <= 12.0) ? bessel_series(1.0, x) : bessel_hankel(1.0, x);
  if (m == 1) return J1;
  if (x > m + 1.0) {
    double a = J0, b = J1;
    for (int k = 1; k < m; ++k) {
      const double c = 2.0 * k / x * b - a;
      a = b;
      b = c;
    }
    return b;
  }
  int K = m + 16 + static_cast<int>(std::sqrt(40.0 * m));
  if (K % 2) ++K;
  double fp = 0.0, fc = 1e-30, fm = 0.0, norm = 2e-30;
  for (int k = K; k >= 1; --k) {
    const double fn = 2.0 * k / x * fc - fp;
    fp = fc;
    fc = fn;
    if (k - 1 == m) fm = fc;
    if ((k - 1) % 2 == 0) norm += (k == 1) ? fc : 2.0 * fc;
    if (std::abs(fc) > 1e250) {
      fc *= 1e-250;
      fp *= 1e-250;
      fm *= 1e-250;
      norm *= 1e-250;
    }
  }
  return fm / norm;
}

// Poisson integral fallback for generic nonnegative orders:
// J_nu(x) = (x/2)^nu / (Gamma(nu+1/2) Gamma(1/2)) int_{-1}^1 cos(xt) (1-t^2)^{nu-1/2} dt.
double bessel_poisson(double nu, double x) {
  const int count = 64 + static_cast<int>(0.7 * x);
  const Quadrature1D q = gauss_jacobi(count, nu - 0.5);
  double s = 0.0;
  for (std::size_t i = 0; i < q.nodes.size(); ++i)
    s += q.weights[i] * std::cos(x * q.nodes[i]);
  const double lpre =
      nu * std::log(0.5 * x) - std::lgamma(nu + 0.5) - 0.5 * std::log(kPi);
  return std::exp(lpre) * s;
}

}  // namespace

double bessel_j(double nu, double x) {
  if (x < 0.0 || nu < 0.0)
    throw std::domain_error("bessel_j: nu >= 0 and x >= 0 required");
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  const double ri = std::round(nu);
  if (std::abs(nu - ri) < 1e-12 && ri < 1e6)
    return bessel_int(static_cast<int>(ri), x);
  const double rh = std::round(nu - 0.5);
  if (std::abs(nu - 0.5 - rh) < 1e-12 && rh >= 0.0 && rh < 1e6)
    return std::sqrt(2.0 * x / kPi) * sph_jn(static_cast<int>(rh), x);
  if (x <= 12.0 || x * x <= 4.0 * (nu + 1.0)) return bessel_series(nu, x);
  return bessel_poisson(nu, x);
}

namespace {

// E1(-ix) = -Ci(x) - i (Si(x) - pi/2) for x > 0, modified Lentz continued
// fraction E1(z) = e^{-z} / (z+1- 1/(z+3- 4/(z+5- 9/(...)))).
Cplx e1_neg_ix(double x) {
  const Cplx z(0.0, -x);
  const double tiny = 1e-290;
  Cplx f = z + 1.0;
  if (std::abs(f) < tiny) f = tiny;
  Cplx C = f, D = 0.0;
  for (int k = 1; k <= 40000; ++k) {
    const double a = -static_cast<double>(k) * static_cast<double>(k);
    const Cplx b = z + static_cast<double>(2 * k + 1);
    D = b + a * D;
    if (std::abs(D) < tiny) D = tiny;
    C = b + a / C;
    if (std::abs(C) < tiny) C = tiny;
    D = 1.0 / D;
    const Cplx delta = C * D;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-z) / f;
}

}  // namespace

double sine_integral(double x) {
  const double ax = std::abs(x);
  double val;
  if (ax <= 2.5) {
    double u = ax, sum = ax;
    for (int k = 1; k < 60; ++k) {
      u *= -(ax * ax) / ((2.0 * k) * (2.0 * k + 1.0));
      const double c = u / (2.0 * k + 1.0);
      sum += c;
      if (std::abs(c) < 1e-18) break;
    }
    val = sum;
  } else {
    val = kPi / 2.0 - e1_neg_ix(ax).imag();
  }
  return x < 0.0 ? -val : val;
}

double cosine_integral(double x) {
  if (x <= 0.0) throw std::domain_error("cosine_integral: x > 0 required");
  if (x <= 2.5) {
    double sum = kEulerGamma + std::log(x);
    double u = 1.0;
    for (int k = 1; k < 60; ++k) {
      u *= -(x * x) / ((2.0 * k - 1.0) * (2.0 * k));
      const double c = u / (2.0 * k);
      sum += c;
      if (std::abs(c) < 1e-18) break;
    }
    return sum;
  }
  return -e1_neg_ix(x).real();
}

std::int64_t stirling_first(int alpha, int m, bool signed_kind) {
  if (alpha < 0 || alpha > 20)
    throw std::domain_error("stirling_first: 0 <= alpha <= 20 required");
  if (m < 0 || m > alpha) return 0;
  static const auto table = [] {
    // unsigned recurrence [a+1, m] = a [a, m] + [a, m-1]
    std::array<std::array<std::int64_t, 21>, 21> t{};
    t[0][0] = 1;
    for (int a = 0; a < 20; ++a)
      for (int j = 0; j <= a + 1; ++j)
        t[a + 1][j] = a * t[a][j] + (j > 0 ? t[a][j - 1] : 0);
    return t;
  }();
  const std::int64_t u = table[alpha][m];
  return signed_kind && ((alpha - m) % 2 != 0) ? -u : u;
}

Cplx pochhammer(Cplx a, int k) {
  if (k < 0) throw std::domain_error("pochhammer: k >= 0 required");
  Cplx p = 1.0;
  for (int j = 0; j < k; ++j) p *= a + static_cast<double>(j);
  return p;
}

double sphere_area(int n) {
  if (n < 1) throw std::domain_error("sphere_area: n >= 1 required");
  return 2.0 * std::exp(0.5 * n * std::log(kPi) - std::lgamma(0.5 * n));
}

std::int64_t harmonic_dim(int l, int n) {
  if (l < 0 || n < 2) throw std::domain_error("harmonic_dim: l >= 0, n >= 2 required");
  if (l == 0) return 1;
  // binom(n+l-3, l-1) by the multiplicative rule (integer at every step)
  __int128 b = 1;
  for (int j = 1; j <= l - 1; ++j) b = b * (n - 2 + j) / j;
  __int128 r = b * (n + 2 * l - 2);
  if (r % l != 0) throw std::logic_error("harmonic_dim: nonintegral result");
  r /= l;
  if (r > static_cast<__int128>(9'000'000'000'000'000'000LL))
    throw std::domain_error("harmonic_dim: overflow");
  return static_cast<std::int64_t>(r);
}

Quadrature1D gauss_jacobi(int count, double exponent) {
  if (count < 1 || exponent <= -1.0)
    throw std::domain_error("gauss_jacobi: count >= 1 and exponent > -1 required");

  static std::mutex cache_mutex;
  static std::map<std::pair<int, double>, Quadrature1D> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({count, exponent});
    if (it != cache.end()) return it->second;
  }

  const double e = exponent;
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(count);
  Eigen::VectorXd sub = Eigen::VectorXd::Zero(std::max(count - 1, 0));
  for (int k = 1; k < count; ++k) {
    const double b2 = (k == 1)
                          ? 1.0 / (3.0 + 2.0 * e)
                          : k * (k + 2.0 * e) /
                                (4.0 * (k + e) * (k + e) - 1.0);
    sub[k - 1] = std::sqrt(b2);
  }
  const double mu0 =
      std::sqrt(kPi) * std::exp(std::lgamma(e + 1.0) - std::lgamma(e + 1.5));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("gauss_jacobi: eigensolve failed");

  Quadrature1D q;
  q.nodes.resize(count);
  q.weights.resize(count);
  for (int i = 0; i < count; ++i) {
    q.nodes[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    q.weights[i] = mu0 * v0 * v0;
  }
  // Enforce the exact symmetry of the even weight function.
  for (int i = 0; i < count / 2; ++i) {
    const int j = count - 1 - i;
    const double v = 0.5 * (q.nodes[j] - q.nodes[i]);
    q.nodes[i] = -v;
    q.nodes[j] = v;
    const double w = 0.5 * (q.weights[i] + q.weights[j]);
    q.weights[i] = q.weights[j] = w;
  }
  if (count % 2) q.nodes[count / 2] = 0.0;

  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(std::make_pair(count, exponent), q);
  }
  return q;
}

Quadrature1D gauss_legendre_panels(double a, double b, int panels, int per_panel) {
  if (panels < 1 || per_panel < 1)
    throw std::domain_error("gauss_legendre_panels: panels, per_panel >= 1");
  const Quadrature1D base = gauss_jacobi(per_panel, 0.0);
  Quadrature1D q;
  q.nodes.reserve(static_cast<std::size_t>(panels) * per_panel);
  q.weights.reserve(static_cast<std::size_t>(panels) * per_panel);
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double mid = lo + 0.5 * h, half = 0.5 * h;
    for (int i = 0; i < per_panel; ++i) {
      q.nodes.push_back(mid + half * base.nodes[i]);
      q.weights.push_back(half * base.weights[i]);
    }
  }
  return q;
}

double factorial(int n) {
  if (n < 0 || n > 170) throw std::domain_error("factorial: 0 <= n <= 170");
  static const auto table = [] {
    std::array<double, 171> t{};
    t[0] = 1.0;
    for (int i = 1; i <= 170; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table[n];
}

}  // namespace adz::specfun
