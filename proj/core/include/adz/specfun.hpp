// Copyright 2026 the adz authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace adz::specfun {

using Cplx = std::complex<double>;

// Nodes/weights of a one-dimensional quadrature rule.  For gauss_jacobi the
// weight function (1-v^2)^exponent on [-1,1] is folded into `weights`.
struct Quadrature1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Principal-branch ln Gamma(z) via a Lanczos sum (g = 7, 9 terms),
// reflection for Re z < 1/2.  Throws std::domain_error on poles
// (z a nonpositive integer).  exp(result) is branch-insensitive, which is
// all downstream gamma-ratio arithmetic relies on.
Cplx log_gamma_complex(Cplx z);

// Gegenbauer polynomial C_l^lambda(v) normalized so C_l^lambda(1) = 1.
// lambda = 0 (the n = 2 case of the index (n-2)/2) degenerates to the
// Chebyshev T_l, which already satisfies T_l(1) = 1.
double gegenbauer(int l, double lambda, double v);

// Bessel J_nu(x), x >= 0.  Power series for small arguments; for large
// arguments Hankel asymptotics (small nu) or stable recurrences seeded by
// closed forms (integer and half-integer nu, the orders produced by
// l + (n-2)/2).  Other nu fall back to the Poisson/Gauss-Jacobi integral.
double bessel_j(double nu, double x);

// Si(x) = int_0^x sin(w)/w dw.  Power series for |x| <= 2.5, otherwise a
// modified-Lentz continued fraction for E1(-ix) (Abramowitz-Stegun 5.1.22).
double sine_integral(double x);

// Ci(x) = -int_x^infty cos(w)/w dw, x > 0.  Shares the E1 machinery with
// sine_integral; used for oscillatory tail corrections.
double cosine_integral(double x);

// Stirling numbers of the first kind, alpha <= 20 (exact in int64).
// signed_kind = false -> unsigned cycle counts [alpha, m];
// signed_kind = true  -> s(alpha, m) = (-1)^{alpha-m} [alpha, m].
// Out-of-range (m < 0 or m > alpha) returns 0.
std::int64_t stirling_first(int alpha, int m, bool signed_kind);

// Rising factorial (a)_k = a (a+1) ... (a+k-1), (a)_0 = 1.
Cplx pochhammer(Cplx a, int k);

// Surface measure |S^{n-1}| = 2 pi^{n/2} / Gamma(n/2) of the unit sphere
// in R^n, n >= 1 (|S^0| = 2).
double sphere_area(int n);

// Dimension of the space of spherical harmonics of degree l on S^{n-1}:
// 1 for l = 0, else ((n+2l-2)/l) * binom(n+l-3, l-1).  Exact integer.
std::int64_t harmonic_dim(int l, int n);

// Gauss-Jacobi rule with `count` nodes for int_{-1}^{1} f(v) (1-v^2)^e dv,
// e > -1.  Built by Golub-Welsch: symmetric tridiagonal Jacobi matrix,
// eigenvalues = nodes, weights from first eigenvector components.
// Nodes strictly increasing; symmetrized about 0.
Quadrature1D gauss_jacobi(int count, double exponent);

// Composite Gauss-Legendre rule on [a, b]: `panels` equal panels with
// `per_panel` nodes each.  Convenience built on gauss_jacobi(_, 0).
Quadrature1D gauss_legendre_panels(double a, double b, int panels, int per_panel);

// cis_l(x): cos(x) for even l, i sin(x) for odd l.
inline Cplx cis_parity(int l, double x) {
  return (l % 2 == 0) ? Cplx(std::cos(x), 0.0) : Cplx(0.0, std::sin(x));
}

// i^k for integer k (negative k allowed).
inline Cplx unit_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// n! as double (n <= 170).
double factorial(int n);

}  // namespace adz::specfun
