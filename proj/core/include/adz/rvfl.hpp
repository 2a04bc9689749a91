// Copyright 2026 the adz authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "adz/barron.hpp"
#include "adz/specfun.hpp"

namespace adz::rvfl {

using specfun::Cplx;

// --- deterministic RNG helpers (fixed algorithms, platform-independent) ---

std::uint64_t splitmix64(std::uint64_t x);

// Seed for an indexed stream derived from a base seed; streams are
// independent of execution order and thread count.
inline std::uint64_t stream_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(splitmix64(base) + index);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform01();                    // in [0, 1)
  double uniform(double a, double b);
  double gaussian();                     // Box-Muller, no cached spare
  void unit_vector(int n, double* out);  // uniform on S^{n-1}
 private:
  std::mt19937_64 gen_;
};

// --- feature sampling ---

// Sampling law for the truncated-bias representation of f over K(r).  It has
// an absolutely continuous part on S^{n-1} x [-r, r] with density
// proportional to |h^alpha(w, b)| (rejection-sampled under a verified
// envelope) plus, for each order q < alpha, a point-mass layer at b = -r
// weighted by |h^q(w, -r)| and paired with the order-(q+1) activation.  The
// boundary layer is what truncating the bias range costs: without it the
// network mean misses the Taylor polynomial of the order-0 profile at -r.
struct FeatureDensity {
  const barron::DualProfile* profile = nullptr;
  int alpha = 0;
  double r = 1.0;
  double norm_1 = 0.0;    // ||h||_1 of the strip part
  double envelope = 0.0;  // >= sup |h| on the strip (5% margin over grid max)
  std::vector<std::vector<Cplx>> atom_values;  // [q][node]: h^q(theta_j, -r)
  std::vector<std::vector<double>> atom_cum;   // [q][node]: cumulative mass
  std::vector<double> atom_mass;               // [q]: total mass per order
  double total_mass = 0.0;                     // norm_1 + sum of atom masses
  // Optional replacement law h(w, b); when set it is sampled instead of the
  // profile (norm_1/envelope must then describe it, and no boundary layer is
  // attached).  Lets synthetic laws (e.g. constants) reuse the sampler.
  std::function<Cplx(const double*, double)> h_override;

  Cplx value(const double* w, double b) const {
    return h_override ? h_override(w, b) : profile->eval(w, b);
  }
};

// Throws std::domain_error when ||h||_1 <= 1e-12 (degenerate zero profile).
FeatureDensity build_density(const barron::DualProfile& h_alpha, int alpha, double r);

struct Feature {
  std::vector<double> w;
  double b = 0.0;
  int order = 0;              // activation order (alpha for strip draws,
                              // q + 1 for an order-q boundary atom)
  Cplx value{0.0, 0.0};       // law value at (w, b) for the drawn layer
};

// One stream of i.i.d. draws from the mixed law: with probability
// norm_1 / total_mass a strip feature (rejection sampling under the
// envelope), otherwise a boundary atom (order by mass, node by inverse CDF).
// Deterministic given the seed.  Throws std::runtime_error if the measured
// strip acceptance rate falls below 1e-4.
std::vector<Feature> sample_features(const FeatureDensity& density, int m,
                                     std::uint64_t seed);

struct RandomFeatureNetwork {
  int alpha = 0;
  double r = 1.0;
  std::uint64_t seed = 0;
  std::vector<Cplx> a;        // |a_j| = total_mass / m
  std::vector<double> w;      // flattened m x n
  std::vector<double> b;
  std::vector<int> order;     // per-neuron activation order in [1, alpha]
  int n = 0;
  std::size_t size() const { return b.size(); }
};

// a_j = total_mass * (h/|h|)(feature_j) / m, where h is the layer the j-th
// feature was drawn from (strip law or boundary atom).
RandomFeatureNetwork build_network(const FeatureDensity& density, int m,
                                   std::uint64_t seed);

// f_m(x) = sum_j a_j delta^{(-order_j)}(<w_j, x> - b_j).
Cplx eval_network(const RandomFeatureNetwork& net, const double* x);

// Cubic grid over [-r, r]^n filtered to the closed ball; spacing r/resolution.
struct BallGrid {
  int n = 0;
  double r = 0.0;
  double spacing = 0.0;
  std::vector<double> points;  // flattened count x n
  std::size_t count() const { return n ? points.size() / n : 0; }
  const double* point(std::size_t i) const { return points.data() + i * static_cast<std::size_t>(n); }
};
BallGrid make_ball_grid(int n, double r, int resolution);

struct SupError {
  double grid_max = 0.0;     // max over grid of |f - f_m|
  double slack_bound = 0.0;  // grid_max + (lip_f + lip_fm) * spacing * sqrt(n) / 2
  double net_max = 0.0;      // max over grid of |f_m| (boundedness check)
};

// f_on_grid must hold the oracle values at grid.point(i).  lip_f is the
// caller-supplied Lipschitz constant of f; the network's own constant is
// coeff_mass * delta^{(1-alpha)}(2r) for alpha >= 2 and 0 (piecewise
// constant ridges) for alpha = 1.  coeff_mass is the total coefficient mass
// m * |a_j| of the network (order-1 atoms are constant on the open ball, so
// they add no slope).
SupError sup_error(const RandomFeatureNetwork& net, const std::vector<Cplx>& f_on_grid,
                   const BallGrid& grid, double lip_f, double coeff_mass);

struct WilsonInterval {
  double freq = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};
WilsonInterval wilson(int successes, int total);  // 95% score interval

struct TrialConfig {
  std::string density_id = "shifted_gaussian";
  int n = 3;
  int alpha = 2;
  double r = 1.0;
  std::vector<int> m_values{256, 512, 1024, 2048, 4096, 8192, 16384};
  std::vector<double> eps_values;
  int trials = 200;
  std::uint64_t seed = 1;
  int grid_resolution = 8;
  int sphere_resolution = 16;
  unsigned threads = 1;
};

struct TrialReport {
  TrialConfig config;
  double norm_1 = 0.0;           // ||h||_1 of the strip part
  double boundary_mass = 0.0;    // total mass of the b = -r atom layers
  double total_mass = 0.0;       // norm_1 + boundary_mass (= m |a_j|)
  double norm_1_inf = 0.0;       // ||h^alpha||_{1,inf}
  double lambda_cap = 0.0;       // 2r ||h^alpha||_{1,inf} delta^{(-alpha)}(2r)
  double lip_f = 0.0;
  std::vector<std::vector<double>> sup_errors;    // [m index][trial]
  std::vector<std::vector<double>> quantiles;     // [m index][5]: p10 p25 p50 p75 p90
  std::vector<std::vector<WilsonInterval>> exceedance;  // [m index][eps index]
  double slope = 0.0;            // log-log fit of median error vs m
  double max_net_value = 0.0;    // max |f_m| seen over all trials and grids
  int bound_violations = 0;      // count of |f_m| > lambda_cap events
};

// Runs the Monte-Carlo campaign.  Deterministic for a fixed seed regardless
// of `threads`.  eps_values empty -> derived from the observed error scale.
TrialReport run_trials(const TrialConfig& config);

}  // namespace adz::rvfl
