// Copyright 2026 the adz authors
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "adz/radon.hpp"
#include "adz/rvfl.hpp"
#include "commands.hpp"

namespace adz::cli {

barron::SourceDensity density_from_config(View& view, int n) {
  View density = view.child("density");
  const std::string id = density.text("id");
  const auto ids = barron::catalog_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
    std::string known;
    for (const auto& name : ids) {
      if (!known.empty()) known += ", ";
      known += name;
    }
    throw ConfigError("density.id '" + id + "' is not in the catalog (" + known + ")");
  }
  View params = density.child_or_empty("params");
  params.done();  // every catalog density is parameter-free today
  density.done();
  return barron::make_density(id, n);
}

std::uint64_t resolve_seed(const CommonOptions& options, View& view,
                           nlohmann::json* resolved) {
  std::uint64_t seed = view.unsigned64("seed", 1);
  if (options.seed) {
    seed = *options.seed;
    (*resolved)["seed"] = seed;
  }
  return seed;
}

void cmd_represent(const CommonOptions& options) {
  const nlohmann::json config = load_config_file(options.config_path);
  nlohmann::json resolved = nlohmann::json::object();
  View view(config, "", &resolved);

  const int n = static_cast<int>(view.integer("n"));
  if (n < 2 || n > 8) throw ConfigError("n must be in [2, 8]");
  const int alpha = static_cast<int>(view.integer("alpha", 0));
  if (alpha < 0 || alpha > 6) throw ConfigError("alpha must be in [0, 6]");
  const double r = view.number("r", 2.0);
  if (!(r > 0.0)) throw ConfigError("r must be > 0");
  const int grid_resolution = static_cast<int>(view.integer("grid_resolution", 3));
  if (grid_resolution < 1 || grid_resolution > 32)
    throw ConfigError("grid_resolution must be in [1, 32]");
  const int sphere_resolution = static_cast<int>(view.integer("sphere_resolution", 16));
  const double big_t = view.number("T", 0.0);
  const int t_count = static_cast<int>(view.integer("t_count", 2048));
  const int b_points = static_cast<int>(view.integer("b_points", 128));
  const std::string format = view.text("format", "csv");
  const std::string output_path = view.text("output_path", "");
  barron::SourceDensity density = density_from_config(view, n);
  const std::uint64_t seed = resolve_seed(options, view, &resolved);
  view.done();

  const barron::DualProfile profile = barron::make_dual_profile(
      density, alpha, sphere_resolution, big_t, t_count, options.threads);
  const rvfl::BallGrid grid = rvfl::make_ball_grid(n, r, grid_resolution);

  Table table;
  table.columns = {"kind"};
  for (int i = 0; i < n; ++i) table.columns.push_back("x" + std::to_string(i));
  for (const char* name :
       {"re_f", "im_f", "re_recon", "im_recon", "abs_error", "norm_phi", "norm_h", "ratio"})
    table.columns.push_back(name);

  const auto h_eval = [&](const double* w, double t) { return profile.eval(w, t); };
  for (std::size_t p = 0; p < grid.count(); ++p) {
    const double* x = grid.point(p);
    const Cplx f = barron::eval_f(density, x);
    const Cplx recon = alpha == 0
                           ? radon::dual_radon(h_eval, x, profile.theta_rule)
                           : radon::nalpha_eval(profile, alpha, r, x, b_points);
    auto& row = table.add_row();
    row[0] = Cell("point");
    for (int i = 0; i < n; ++i) row[1 + i] = Cell(x[i]);
    row[n + 1] = Cell(f.real());
    row[n + 2] = Cell(f.imag());
    row[n + 3] = Cell(recon.real());
    row[n + 4] = Cell(recon.imag());
    row[n + 5] = Cell(std::abs(f - recon));
  }

  const double norm_phi = barron::barron_norm(density, alpha);
  const double norm_h = profile.norm_1_inf;
  const double ratio = norm_h / norm_phi;
  auto& summary = table.add_row();
  summary[0] = Cell("summary");
  summary[n + 6] = Cell(norm_phi);
  summary[n + 7] = Cell(norm_h);
  summary[n + 8] = Cell(ratio);

  if (!(ratio <= 1.0 + 1e-6))
    throw SelfCheckError("represent: ||h^alpha||_{1,inf} exceeds the source norm (ratio " +
                         format_double(ratio) + ")");

  emit(table, "represent", resolved, seed, format, output_path, options.out_path);
}

}  // namespace adz::cli
