// Copyright 2026 the adz authors
// SPDX-License-Identifier: Apache-2.0
#include "adz/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "adz/radon.hpp"

namespace adz::bounds {
namespace {

constexpr double kPi = 3.14159265358979323846;

void require(bool ok, const char* message) {
  if (!ok) throw std::domain_error(message);
}

}  // namespace

ThetaConstants theta_constants(int lambda) {
  require(lambda >= 1, "theta_constants: lambda must be >= 1");
  const double l = static_cast<double>(lambda);
  ThetaConstants out;
  out.theta = lambda >= 3 ? l * std::log(l) + l * std::log(std::log(l)) + 5.0 * l
                          : 5.0 * l;
  out.big_theta =
      out.theta * std::sqrt(kPi) *
      std::pow(l * l * l + l * l + 0.5 * l + 1.0 / 30.0, 1.0 / 6.0);
  return out;
}

double ball_volume(int lambda, double radius) {
  require(lambda >= 1, "ball_volume: lambda must be >= 1");
  require(radius >= 0.0, "ball_volume: radius must be >= 0");
  const double l = static_cast<double>(lambda);
  return std::pow(kPi, 0.5 * l) / std::tgamma(0.5 * l + 1.0) * std::pow(radius, l);
}

namespace {

// Certified continuum cover of the ball K(rho) in R^lambda, lambda in {2,3}.
// A fine lattice of spacing s leaves every continuum point within s*sqrt(l)/2
// of a lattice point, so a first-fit net of radius delta' = delta - s*sqrt(l)/2
// over the lattice is a delta-cover of the whole ball.
std::int64_t greedy_lattice_cover(int lambda, double rho, double delta) {
  const double spacing = lambda == 2 ? delta / 20.0 : delta / 10.0;
  const double slack = 0.5 * spacing * std::sqrt(static_cast<double>(lambda));
  const double shrunk = delta - slack;
  require(shrunk > 0.0, "covering_number: lattice spacing exceeds delta");
  // Lattice points out to rho + slack: the nearest lattice point of a ball
  // point can sit just outside the ball.
  const double reach = rho + slack;
  const std::int64_t half = static_cast<std::int64_t>(std::floor(reach / spacing)) + 1;
  const std::int64_t side = 2 * half + 1;
  double total = 1.0;
  for (int axis = 0; axis < lambda; ++axis) total *= static_cast<double>(side);
  require(total <= 2.0e7, "covering_number: greedy lattice too large");

  const std::int64_t count = static_cast<std::int64_t>(total);
  std::vector<std::uint8_t> covered(static_cast<std::size_t>(count), 0);
  std::vector<std::int64_t> stride(static_cast<std::size_t>(lambda));
  stride[static_cast<std::size_t>(lambda) - 1] = 1;
  for (int axis = lambda - 2; axis >= 0; --axis)
    stride[static_cast<std::size_t>(axis)] = stride[static_cast<std::size_t>(axis) + 1] * side;

  const double reach2 = reach * reach;
  const double shrunk2 = shrunk * shrunk;
  const std::int64_t box = static_cast<std::int64_t>(std::ceil(shrunk / spacing));

  std::vector<std::int64_t> idx(static_cast<std::size_t>(lambda), -half);
  std::int64_t centers = 0;
  for (std::int64_t flat = 0; flat < count; ++flat) {
    if (!covered[static_cast<std::size_t>(flat)]) {
      double norm2 = 0.0;
      for (int axis = 0; axis < lambda; ++axis) {
        const double coord = static_cast<double>(idx[static_cast<std::size_t>(axis)]) * spacing;
        norm2 += coord * coord;
      }
      if (norm2 <= reach2) {
        ++centers;
        // Mark every lattice point within the shrunken radius of this center.
        std::vector<std::int64_t> lo(static_cast<std::size_t>(lambda));
        std::vector<std::int64_t> hi(static_cast<std::size_t>(lambda));
        for (int axis = 0; axis < lambda; ++axis) {
          lo[static_cast<std::size_t>(axis)] =
              std::max<std::int64_t>(-half, idx[static_cast<std::size_t>(axis)] - box);
          hi[static_cast<std::size_t>(axis)] =
              std::min<std::int64_t>(half, idx[static_cast<std::size_t>(axis)] + box);
        }
        std::vector<std::int64_t> probe = lo;
        while (true) {
          double dist2 = 0.0;
          std::int64_t offset = 0;
          for (int axis = 0; axis < lambda; ++axis) {
            const double diff =
                static_cast<double>(probe[static_cast<std::size_t>(axis)] -
                                    idx[static_cast<std::size_t>(axis)]) *
                spacing;
            dist2 += diff * diff;
            offset += (probe[static_cast<std::size_t>(axis)] + half) *
                      stride[static_cast<std::size_t>(axis)];
          }
          if (dist2 <= shrunk2) covered[static_cast<std::size_t>(offset)] = 1;
          int axis = lambda - 1;
          while (axis >= 0) {
            if (++probe[static_cast<std::size_t>(axis)] <= hi[static_cast<std::size_t>(axis)]) break;
            probe[static_cast<std::size_t>(axis)] = lo[static_cast<std::size_t>(axis)];
            --axis;
          }
          if (axis < 0) break;
        }
      } else {
        covered[static_cast<std::size_t>(flat)] = 1;  // outside the reach: nothing to cover
      }
    }
    int axis = lambda - 1;
    while (axis >= 0) {
      if (++idx[static_cast<std::size_t>(axis)] <= half) break;
      idx[static_cast<std::size_t>(axis)] = -half;
      --axis;
    }
  }
  return centers;
}

}  // namespace

CoveringResult covering_number(int lambda, double rho, double delta, CoverMode mode) {
  require(lambda >= 1, "covering_number: lambda must be >= 1");
  require(rho > 0.0, "covering_number: rho must be > 0");
  require(delta > 0.0, "covering_number: delta must be > 0");

  CoveringResult out;
  const double l = static_cast<double>(lambda);
  out.lower = std::max(1.0, std::pow(rho / delta, l));
  out.upper = theta_constants(lambda).theta * std::pow((rho + delta) / delta, l);

  if (delta >= rho) {
    out.exact = 1;  // one delta-ball at the origin covers K(rho)
    out.greedy_in_sandwich = true;
    return out;
  }
  if (mode == CoverMode::greedy) {
    std::int64_t exact = 0;
    if (lambda == 1) {
      // Intervals of radius delta covering [-rho, rho]: sweep from the left
      // edge; ceil(rho/delta) is attained and optimal.
      exact = static_cast<std::int64_t>(std::ceil(rho / delta - 1e-9));
    } else if (lambda <= 3) {
      exact = greedy_lattice_cover(lambda, rho, delta);
    } else {
      throw std::domain_error("covering_number: greedy mode supports lambda <= 3");
    }
    out.exact = exact;
    const double value = static_cast<double>(exact);
    out.greedy_in_sandwich = value >= out.lower - 0.5 && value <= out.upper + 0.5;
  }
  return out;
}

ZetaDelta zeta_delta(int lambda, double b, double k, double eps, double n) {
  require(lambda >= 1, "zeta_delta: lambda must be >= 1");
  require(b > 0.0, "zeta_delta: b must be > 0");
  require(k > 0.0, "zeta_delta: k must be > 0");
  require(eps > 0.0, "zeta_delta: eps must be > 0");
  require(n > 0.0, "zeta_delta: n must be > 0");
  const double ratio = b / eps;
  double disc = 1.0 - 4.0 * static_cast<double>(lambda) * ratio * ratio / n;
  if (disc < -1e-12)
    throw std::domain_error("zeta_delta: infeasible sample count (n < 4 lambda (b/eps)^2)");
  disc = std::max(disc, 0.0);
  ZetaDelta out;
  out.zeta = (eps * n / (b * b)) * (1.0 + std::sqrt(disc));
  out.delta = static_cast<double>(lambda) / (k * out.zeta);
  return out;
}

double chernoff_cover_bound(const BoundParams& params) {
  require(params.r > 0.0, "chernoff_cover_bound: r must be > 0");
  const ZetaDelta zd = zeta_delta(params.lambda, params.b, params.k, params.eps, params.n);
  const double l = static_cast<double>(params.lambda);
  const double ln_cover =
      std::log(theta_constants(params.lambda).theta) +
      l * std::log((params.r + zd.delta) / zd.delta);
  const double ln_bound = std::log(2.0) + ln_cover + l * std::log(zd.delta) +
                          l * (std::log(params.k) + 0.5 - std::log(l)) +
                          l * std::log(zd.zeta) - 0.25 * params.eps * zd.zeta;
  if (ln_bound >= 0.0) return 1.0;
  return std::exp(ln_bound);
}

RnnResult rnn_bound(double norm_nalpha, double r, int alpha, int dim, std::int64_t m,
                    std::optional<double> eps, std::optional<double> k_rate) {
  require(alpha != 1, "rnn_bound: alpha = 1 networks are outside the bound");
  require(alpha >= 2, "rnn_bound: alpha must be >= 2");
  require(norm_nalpha > 0.0, "rnn_bound: the mixed norm must be > 0");
  require(r > 0.0, "rnn_bound: r must be > 0");
  require(dim >= 1, "rnn_bound: dim must be >= 1");
  require(m >= 2, "rnn_bound: m must be >= 2");
  require(!(eps && k_rate), "rnn_bound: supply at most one of eps and k_rate");

  RnnResult out;
  out.lambda_cap = 2.0 * r * norm_nalpha * radon::activation(alpha, 2.0 * r);
  out.lipschitz = 2.0 * r * norm_nalpha * radon::activation(alpha - 1, 2.0 * r);

  const double ln_m = std::log(static_cast<double>(m));
  const double d = static_cast<double>(dim);
  if (eps) {
    require(*eps > 0.0, "rnn_bound: eps must be > 0");
    out.eps_used = *eps;
    out.k_rate = (*eps / out.lambda_cap) * (*eps / out.lambda_cap) *
                 static_cast<double>(m) / (d * ln_m);
  } else {
    out.k_rate = k_rate ? *k_rate : 2.0;
    require(out.k_rate > 0.0, "rnn_bound: k_rate must be > 0");
    out.eps_used =
        out.lambda_cap * std::sqrt(out.k_rate * d * ln_m / static_cast<double>(m));
  }

  // The derivation needs both the log-rate floor and the Chernoff
  // discriminant; with a derived eps the two coincide.
  const double chernoff_floor =
      4.0 * d * (out.lambda_cap / out.eps_used) * (out.lambda_cap / out.eps_used);
  out.feasible =
      out.k_rate * ln_m >= 4.0 * (1.0 - 1e-12) &&
      static_cast<double>(m) >= chernoff_floor * (1.0 - 1e-12);

  out.bound_exact = 1.0;
  if (out.feasible) {
    BoundParams params;
    params.lambda = dim;
    params.b = out.lambda_cap;
    params.k = out.lipschitz;
    params.eps = out.eps_used;
    params.n = static_cast<double>(m);
    params.r = r;
    out.bound_exact = chernoff_cover_bound(params);
  }

  const double ln_simplified =
      std::log(2.0) + std::log(ball_volume(dim, 0.5 * static_cast<double>(alpha - 1))) +
      std::log(theta_constants(dim).big_theta) +
      0.5 * d * (std::log(out.k_rate * ln_m) - std::log(2.0 * kPi) -
                 (out.k_rate - 1.0) * ln_m);
  out.bound_simplified = ln_simplified >= 0.0 ? 1.0 : std::exp(ln_simplified);
  return out;
}

}  // namespace adz::bounds
