// Copyright 2026 the adz authors
// SPDX-License-Identifier: Apache-2.0
#include "adz/rvfl.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "adz/parallel.hpp"
#include "adz/radon.hpp"

namespace adz::rvfl {
namespace {

constexpr double kWilsonZ = 1.959963984540054;  // 97.5% normal quantile

double quantile_sorted(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) return 0.0;
  const double pos = p * (sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = pos - lo;
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double Rng::uniform01() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double a, double b) { return a + (b - a) * uniform01(); }

double Rng::gaussian() {
  // Box-Muller without the cached spare: one draw consumes two variates,
  // which keeps the consumption pattern (and thus determinism) simple.
  const double u1 = 1.0 - uniform01();  // in (0, 1]
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * 3.14159265358979323846 * u2);
}

void Rng::unit_vector(int n, double* out) {
  for (;;) {
    double s = 0.0;
    for (int k = 0; k < n; ++k) {
      out[k] = gaussian();
      s += out[k] * out[k];
    }
    if (s > 1e-24) {
      const double inv = 1.0 / std::sqrt(s);
      for (int k = 0; k < n; ++k) out[k] *= inv;
      return;
    }
  }
}

FeatureDensity build_density(const barron::DualProfile& h_alpha, int alpha,
                             double r) {
  if (alpha < 1) throw std::domain_error("build_density: alpha >= 1 required");
  if (alpha != h_alpha.alpha)
    throw std::domain_error("build_density: profile was built for a different alpha");
  if (r <= 0.0) throw std::domain_error("build_density: r > 0 required");
  if (r > h_alpha.T)
    throw std::domain_error("build_density: table does not cover [-r, r]");

  FeatureDensity fd;
  fd.profile = &h_alpha;
  fd.alpha = alpha;
  fd.r = r;

  // ||h||_1 over the strip S^{n-1} x [-r, r] by sphere rule x composite
  // Gauss-Legendre in b.  Panels of width <= 0.05 keep the |.| kinks at the
  // profile's zero crossings harmless.
  const int panels = std::max(1, static_cast<int>(std::ceil(2.0 * r / 0.05)));
  const specfun::Quadrature1D q = specfun::gauss_legendre_panels(-r, r, panels, 8);
  const std::size_t cnt = h_alpha.nodes();
  double norm = 0.0;
  for (std::size_t j = 0; j < cnt; ++j) {
    double inner = 0.0;
    for (std::size_t i = 0; i < q.nodes.size(); ++i)
      inner += q.weights[i] * std::abs(h_alpha.eval_node(j, q.nodes[i]));
    norm += h_alpha.theta_rule.weights[j] * inner;
  }
  if (norm <= 1e-12)
    throw std::domain_error("build_density: degenerate profile (zero norm)");
  fd.norm_1 = norm;

  double grid_max = 0.0;
  for (std::size_t j = 0; j < cnt; ++j) {
    const Cplx* row = h_alpha.table.data() + j * h_alpha.t_grid.size();
    for (std::size_t k = 0; k < h_alpha.t_grid.size(); ++k) {
      if (std::abs(h_alpha.t_grid[k]) <= r)
        grid_max = std::max(grid_max, std::abs(row[k]));
    }
  }
  fd.envelope = 1.05 * grid_max;

  // Boundary layers at b = -r: the order-q layer carries the point masses
  // w_j |h^q(theta_j, -r)| over the sphere nodes.  Cumulative node masses
  // drive inverse-CDF selection during sampling.
  fd.atom_values.assign(alpha, {});
  fd.atom_cum.assign(alpha, {});
  fd.atom_mass.assign(alpha, 0.0);
  fd.total_mass = fd.norm_1;
  for (int q_ord = 0; q_ord < alpha; ++q_ord) {
    std::vector<Cplx>& vals = fd.atom_values[q_ord];
    std::vector<double>& cum = fd.atom_cum[q_ord];
    vals.resize(cnt);
    cum.resize(cnt);
    double running = 0.0;
    for (std::size_t j = 0; j < cnt; ++j) {
      vals[j] = h_alpha.eval_node_order(j, q_ord, -r);
      running += h_alpha.theta_rule.weights[j] * std::abs(vals[j]);
      cum[j] = running;
    }
    fd.atom_mass[q_ord] = running;
    fd.total_mass += running;
  }
  return fd;
}

std::vector<Feature> sample_features(const FeatureDensity& density, int m,
                                     std::uint64_t seed) {
  if (m < 1) throw std::domain_error("sample_features: m >= 1 required");
  if (density.envelope <= 0.0)
    throw std::domain_error("sample_features: positive envelope required");
  if (density.profile == nullptr)
    throw std::domain_error("sample_features: density has no profile attached");
  const int n = density.profile->source.n;
  const double total =
      density.total_mass > 0.0 ? density.total_mass : density.norm_1;
  Rng rng(seed);
  std::vector<Feature> out;
  out.reserve(m);
  Feature f;
  f.w.resize(n);
  std::uint64_t proposals = 0, accepted = 0;
  while (out.size() < static_cast<std::size_t>(m)) {
    const double pick = rng.uniform01() * total;
    if (pick < density.norm_1) {
      // Strip draw: rejection sampling under the envelope.
      for (;;) {
        rng.unit_vector(n, f.w.data());
        f.b = rng.uniform(-density.r, density.r);
        const double u = rng.uniform01();
        ++proposals;
        const Cplx hv = density.value(f.w.data(), f.b);
        if (u * density.envelope < std::abs(hv)) {
          ++accepted;
          f.order = density.alpha;
          f.value = hv;
          out.push_back(f);
          break;
        }
        if (proposals >= 65536 &&
            static_cast<double>(accepted) < 1e-4 * static_cast<double>(proposals))
          throw std::runtime_error(
              "sample_features: acceptance rate below 1e-4 (envelope quality)");
      }
    } else {
      // Boundary atom: order by layer mass, node by inverse CDF.
      double rest = pick - density.norm_1;
      std::size_t q_ord = 0;
      while (q_ord + 1 < density.atom_mass.size() &&
             rest >= density.atom_mass[q_ord])
        rest -= density.atom_mass[q_ord++];
      const std::vector<double>& cum = density.atom_cum[q_ord];
      const auto it = std::upper_bound(cum.begin(), cum.end(), rest);
      const std::size_t j = std::min<std::size_t>(
          static_cast<std::size_t>(it - cum.begin()), cum.size() - 1);
      const double* node = density.profile->theta_rule.point(j);
      std::copy(node, node + n, f.w.begin());
      f.b = -density.r;
      f.order = static_cast<int>(q_ord) + 1;
      f.value = density.atom_values[q_ord][j];
      out.push_back(f);
    }
  }
  return out;
}

RandomFeatureNetwork build_network(const FeatureDensity& density, int m,
                                   std::uint64_t seed) {
  const std::vector<Feature> feats = sample_features(density, m, seed);
  RandomFeatureNetwork net;
  net.alpha = density.alpha;
  net.r = density.r;
  net.seed = seed;
  net.n = static_cast<int>(feats.front().w.size());
  net.a.reserve(feats.size());
  net.w.reserve(feats.size() * feats.front().w.size());
  net.b.reserve(feats.size());
  net.order.reserve(feats.size());
  const double total =
      density.total_mass > 0.0 ? density.total_mass : density.norm_1;
  const double scale = total / m;
  for (const Feature& f : feats) {
    const double mag = std::abs(f.value);
    // Strip draws satisfy u * envelope < |h| and atom nodes carry positive
    // mass, so mag > 0 here.
    net.a.push_back(scale * (f.value / mag));
    net.w.insert(net.w.end(), f.w.begin(), f.w.end());
    net.b.push_back(f.b);
    net.order.push_back(f.order);
  }
  return net;
}

Cplx eval_network(const RandomFeatureNetwork& net, const double* x) {
  Cplx acc(0.0, 0.0);
  for (std::size_t j = 0; j < net.size(); ++j) {
    const double* w = net.w.data() + j * static_cast<std::size_t>(net.n);
    double dot = 0.0;
    for (int k = 0; k < net.n; ++k) dot += w[k] * x[k];
    acc += net.a[j] * radon::activation(net.order[j], dot - net.b[j]);
  }
  return acc;
}

BallGrid make_ball_grid(int n, double r, int resolution) {
  if (n < 1 || resolution < 1)
    throw std::domain_error("make_ball_grid: n >= 1 and resolution >= 1 required");
  BallGrid g;
  g.n = n;
  g.r = r;
  g.spacing = r / resolution;
  const int side = 2 * resolution + 1;
  std::vector<int> idx(n, 0);
  std::vector<double> x(n);
  for (;;) {
    double s2 = 0.0;
    for (int k = 0; k < n; ++k) {
      x[k] = (idx[k] - resolution) * g.spacing;
      s2 += x[k] * x[k];
    }
    if (s2 <= r * r * (1.0 + 1e-12))
      g.points.insert(g.points.end(), x.begin(), x.end());
    int k = 0;
    while (k < n && ++idx[k] == side) idx[k++] = 0;
    if (k == n) break;
  }
  return g;
}

SupError sup_error(const RandomFeatureNetwork& net,
                   const std::vector<Cplx>& f_on_grid, const BallGrid& grid,
                   double lip_f, double coeff_mass) {
  if (f_on_grid.size() != grid.count())
    throw std::domain_error("sup_error: oracle values do not match the grid");
  SupError se;
  for (std::size_t i = 0; i < grid.count(); ++i) {
    const Cplx fm = eval_network(net, grid.point(i));
    se.net_max = std::max(se.net_max, std::abs(fm));
    se.grid_max = std::max(se.grid_max, std::abs(f_on_grid[i] - fm));
  }
  // Piecewise-constant ridges (alpha = 1) carry no Lipschitz slack; callers
  // double the grid resolution instead.  Order-1 boundary atoms are constant
  // on the open ball (their ridge is tangent to it), so for alpha >= 2 the
  // slope is capped by the steepest order actually present.
  double slope_unit = 0.0;
  for (int k = 1; k < net.alpha; ++k)
    slope_unit = std::max(slope_unit, radon::activation(k, 2.0 * net.r));
  se.slack_bound = se.grid_max + (lip_f + coeff_mass * slope_unit) *
                                     grid.spacing * std::sqrt(grid.n) * 0.5;
  return se;
}

WilsonInterval wilson(int successes, int total) {
  if (total <= 0 || successes < 0 || successes > total)
    throw std::domain_error("wilson: need 0 <= successes <= total, total > 0");
  WilsonInterval w;
  const double nn = total;
  const double p = successes / nn;
  w.freq = p;
  const double z2 = kWilsonZ * kWilsonZ;
  const double denom = 1.0 + z2 / nn;
  const double center = (p + z2 / (2.0 * nn)) / denom;
  const double half =
      kWilsonZ * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
  w.lo = std::max(0.0, center - half);
  w.hi = std::min(1.0, center + half);
  return w;
}

TrialReport run_trials(const TrialConfig& config) {
  if (config.trials < 30)
    throw std::domain_error("run_trials: at least 30 trials required");
  if (config.alpha < 1)
    throw std::domain_error("run_trials: alpha >= 1 required");
  if (config.m_values.empty())
    throw std::domain_error("run_trials: m_values must be nonempty");
  for (int m : config.m_values)
    if (m < 1) throw std::domain_error("run_trials: m >= 1 required");

  TrialReport rep;
  rep.config = config;

  const barron::SourceDensity density =
      barron::make_density(config.density_id, config.n);
  const barron::DualProfile profile = barron::make_dual_profile(
      density, config.alpha, config.sphere_resolution, 0.0, 2048,
      config.threads);
  const FeatureDensity fd = build_density(profile, config.alpha, config.r);
  rep.norm_1 = fd.norm_1;
  rep.total_mass = fd.total_mass;
  rep.boundary_mass = fd.total_mass - fd.norm_1;
  rep.norm_1_inf = profile.norm_1_inf;
  rep.lambda_cap = 2.0 * config.r * profile.norm_1_inf *
                   radon::activation(config.alpha, 2.0 * config.r);
  rep.lip_f = barron_norm(density, 1);

  const int resolution =
      config.grid_resolution * (config.alpha == 1 ? 2 : 1);
  const BallGrid grid = make_ball_grid(config.n, config.r, resolution);
  std::vector<Cplx> f_on_grid(grid.count());
  adz::parallel_for(grid.count(), config.threads, [&](std::size_t i) {
    f_on_grid[i] = barron::eval_f(density, grid.point(i));
  });

  const std::size_t m_count = config.m_values.size();
  const std::size_t tasks = m_count * static_cast<std::size_t>(config.trials);
  std::vector<double> sup_flat(tasks, 0.0), net_flat(tasks, 0.0);
  adz::parallel_for(tasks, config.threads, [&](std::size_t idx) {
    const std::size_t mi = idx / config.trials;
    const RandomFeatureNetwork net = build_network(
        fd, config.m_values[mi], stream_seed(config.seed, idx));
    const SupError se =
        sup_error(net, f_on_grid, grid, rep.lip_f, fd.total_mass);
    sup_flat[idx] = se.grid_max;
    net_flat[idx] = se.net_max;
  });

  rep.sup_errors.resize(m_count);
  rep.quantiles.resize(m_count);
  for (std::size_t mi = 0; mi < m_count; ++mi) {
    auto begin = sup_flat.begin() + mi * config.trials;
    rep.sup_errors[mi].assign(begin, begin + config.trials);
    std::vector<double> sorted = rep.sup_errors[mi];
    std::sort(sorted.begin(), sorted.end());
    rep.quantiles[mi] = {quantile_sorted(sorted, 0.10), quantile_sorted(sorted, 0.25),
                         quantile_sorted(sorted, 0.50), quantile_sorted(sorted, 0.75),
                         quantile_sorted(sorted, 0.90)};
  }

  for (std::size_t idx = 0; idx < tasks; ++idx) {
    rep.max_net_value = std::max(rep.max_net_value, net_flat[idx]);
    if (net_flat[idx] > rep.lambda_cap * (1.0 + 1e-9)) ++rep.bound_violations;
  }

  std::vector<double> eps = config.eps_values;
  if (eps.empty()) {
    const double base = rep.quantiles.back()[2];  // median at the largest m
    eps = {base, 2.0 * base, 4.0 * base, 8.0 * base};
  }
  rep.config.eps_values = eps;
  rep.exceedance.resize(m_count);
  for (std::size_t mi = 0; mi < m_count; ++mi) {
    rep.exceedance[mi].reserve(eps.size());
    for (double e : eps) {
      int hits = 0;
      for (double v : rep.sup_errors[mi])
        if (v > e) ++hits;
      rep.exceedance[mi].push_back(wilson(hits, config.trials));
    }
  }

  // Log-log regression of median error against m.
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t mi = 0; mi < m_count; ++mi) {
    const double lx = std::log(static_cast<double>(config.m_values[mi]));
    const double ly = std::log(std::max(rep.quantiles[mi][2], 1e-300));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = m_count * sxx - sx * sx;
  rep.slope = denom != 0.0 ? (m_count * sxy - sx * sy) / denom : 0.0;
  return rep;
}

}  // namespace adz::rvfl
