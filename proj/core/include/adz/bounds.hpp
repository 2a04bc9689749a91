// Copyright 2026 the adz authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>

namespace adz::bounds {

struct ThetaConstants {
  double theta = 0.0;      // covering-density constant theta_lambda
  double big_theta = 0.0;  // Theta_lambda = theta_lambda sqrt(pi) (l^3+l^2+l/2+1/30)^{1/6}
};

// theta_lambda = lambda ln lambda + lambda ln ln lambda + 5 lambda for
// lambda >= 3, and 5 lambda below (an admissible covering-density upper
// bound in the n <= theta_n <= n ln n regime).
ThetaConstants theta_constants(int lambda);

double ball_volume(int lambda, double radius);

enum class CoverMode { formula, greedy };

struct CoveringResult {
  double lower = 0.0;                    // volume bound: max(1, (rho/delta)^lambda)
  double upper = 0.0;                    // theta_lambda ((rho+delta)/delta)^lambda
  std::optional<std::int64_t> exact;     // greedy mode: certified cover count
  bool greedy_in_sandwich = false;
};

// Covering numbers of the ball K(rho) in R^lambda by delta-balls.
// formula mode fills the two-sided sandwich; greedy mode additionally builds
// a certified continuum cover (exact sweep for lambda = 1; a fine-lattice
// first-fit net with shrunken radius for lambda in {2,3}) and reports its
// count.  delta >= rho degenerates to a single ball.
CoveringResult covering_number(int lambda, double rho, double delta, CoverMode mode);

struct ZetaDelta {
  double zeta = 0.0;
  double delta = 0.0;
};

// zeta = (eps n / b^2)(1 + sqrt(1 - 4 lambda (b/eps)^2 / n)), delta = lambda/(k zeta).
// Throws std::domain_error when n < 4 lambda (b/eps)^2 (infeasible sample count).
ZetaDelta zeta_delta(int lambda, double b, double k, double eps, double n);

struct BoundParams {
  int lambda = 1;      // ambient dimension of the sup index set
  double b = 1.0;      // almost-sure bound of the summand
  double k = 1.0;      // Lipschitz constant of the summand family
  double eps = 1.0;    // accuracy
  double n = 1.0;      // sample count
  double r = 1.0;      // radius of the index ball K(r)
};

// min(1, 2 N_K^delta delta^lambda (k sqrt(e)/lambda)^lambda zeta^lambda
//        exp(-(eps/4) zeta)), computed in log-space with the covering upper
// bound for N_K^delta at the matched radius delta = lambda/(k zeta).
double chernoff_cover_bound(const BoundParams& params);

struct RnnResult {
  double bound_exact = 1.0;       // via chernoff_cover_bound
  double bound_simplified = 1.0;  // 2 |K((alpha-1)/2)| Theta_n (k ln m / (2 pi m^{k-1}))^{n/2}
  double lambda_cap = 0.0;        // 2r ||f|N^alpha|| delta^{(-alpha)}(2r)
  double lipschitz = 0.0;         // 2r ||f|N^alpha|| delta^{(1-alpha)}(2r)
  double eps_used = 0.0;
  double k_rate = 0.0;
  bool feasible = false;          // k_rate ln m >= 4 and the Chernoff precondition
};

// Concentration bound for an m-atom random network, alpha >= 2 (alpha = 1 is
// rejected: no theorem covers it).  Exactly one of eps / k_rate must be
// supplied; the other is derived through eps = Lambda sqrt(k_rate dim ln m / m).
RnnResult rnn_bound(double norm_nalpha, double r, int alpha, int dim, std::int64_t m,
                    std::optional<double> eps, std::optional<double> k_rate);

}  // namespace adz::bounds
