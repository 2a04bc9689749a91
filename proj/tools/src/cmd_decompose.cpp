// Copyright 2026 the adz authors
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "commands.hpp"

namespace adz::cli {

void cmd_decompose(const CommonOptions& options) {
  const nlohmann::json config = load_config_file(options.config_path);
  nlohmann::json resolved = nlohmann::json::object();
  View view(config, "", &resolved);

  const int n = static_cast<int>(view.integer("n"));
  if (n < 2 || n > 8) throw ConfigError("n must be in [2, 8]");
  const std::vector<std::int64_t> l_list = view.integer_list("l_list");
  for (const auto l : l_list)
    if (l < 0 || l > 128) throw ConfigError("l_list entries must be in [0, 128]");
  const std::vector<double> t_list = view.number_list("t_list", {0.5, 1.0, 2.0});
  for (const double t : t_list)
    if (!(t > 0.0)) throw ConfigError("t_list entries must be > 0");
  const int theta_count = static_cast<int>(view.integer("theta_count", 2));
  if (theta_count < 1) throw ConfigError("theta_count must be >= 1");
  const int theta_resolution = static_cast<int>(view.integer("theta_resolution", 8));
  const int abel_l_max = static_cast<int>(view.integer("abel_l_max", 24));
  if (abel_l_max < 0 || abel_l_max > 128)
    throw ConfigError("abel_l_max must be in [0, 128]");
  spherical::AbelSchedule schedule = spherical::dense_abel_schedule(abel_l_max);
  schedule.r_values = view.number_list("abel_r_values", schedule.r_values);
  for (const double rv : schedule.r_values)
    if (!(rv > 0.0 && rv < 1.0)) throw ConfigError("abel_r_values must lie in (0, 1)");
  const int sphere_resolution = static_cast<int>(view.integer("sphere_resolution", 0));
  const std::string format = view.text("format", "csv");
  const std::string output_path = view.text("output_path", "");
  barron::SourceDensity density = density_from_config(view, n);
  const std::uint64_t seed = resolve_seed(options, view, &resolved);
  view.done();

  Table table;
  table.columns = {"l",        "theta_id", "t",
                   "re_f_l",   "im_f_l",   "re_g_l",
                   "im_g_l",   "inversion_residual", "abel_residual"};

  if (!l_list.empty()) {
    int degree_cap = abel_l_max;
    for (const auto l : l_list) degree_cap = std::max(degree_cap, static_cast<int>(l));
    const barron::ZonalDecomposer decomposer(density, degree_cap, sphere_resolution);

    const spherical::SphereQuadrature probes =
        spherical::sphere_quadrature(n, theta_resolution);
    if (static_cast<std::size_t>(theta_count) > probes.count())
      throw ConfigError("theta_count exceeds the probe rule size");

    for (int theta_id = 0; theta_id < theta_count; ++theta_id) {
      const double* theta = probes.point(static_cast<std::size_t>(theta_id));
      for (const double t : t_list) {
        std::vector<Cplx> pieces(static_cast<std::size_t>(degree_cap) + 1);
        for (int l = 0; l <= degree_cap; ++l)
          pieces[static_cast<std::size_t>(l)] = decomposer.piece_f(l, theta, t);

        const spherical::AbelResult abel = spherical::abel_sum(
            [&](int l) { return pieces[static_cast<std::size_t>(l)]; }, schedule);
        std::vector<double> x(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = t * theta[i];
        const double abel_residual =
            std::abs(abel.value - barron::eval_f(density, x.data()));

        for (const auto l64 : l_list) {
          const int l = static_cast<int>(l64);
          const Cplx f_l = pieces[static_cast<std::size_t>(l)];
          const Cplx g_l = decomposer.g_alpha(l, 0, theta, t);
          const double inversion =
              std::abs(f_l - decomposer.f_from_g(l, theta, t));
          auto& row = table.add_row();
          row[0] = Cell(static_cast<double>(l));
          row[1] = Cell(static_cast<double>(theta_id));
          row[2] = Cell(t);
          row[3] = Cell(f_l.real());
          row[4] = Cell(f_l.imag());
          row[5] = Cell(g_l.real());
          row[6] = Cell(g_l.imag());
          row[7] = Cell(inversion);
          row[8] = Cell(abel_residual);
        }
      }
    }
  }

  emit(table, "decompose", resolved, seed, format, output_path, options.out_path);
}

}  // namespace adz::cli
