// Copyright 2026 the adz authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <string>
#include <vector>

#include "adz/bounds.hpp"
#include "adz/rvfl.hpp"
#include "commands.hpp"

namespace adz::cli {

void cmd_rvfl(const CommonOptions& options) {
  const nlohmann::json config = load_config_file(options.config_path);
  nlohmann::json resolved = nlohmann::json::object();
  View view(config, "", &resolved);

  rvfl::TrialConfig trial;
  trial.n = static_cast<int>(view.integer("n", 3));
  if (trial.n < 2 || trial.n > 8) throw ConfigError("n must be in [2, 8]");
  trial.alpha = static_cast<int>(view.integer("alpha", 2));
  if (trial.alpha < 1 || trial.alpha > 6) throw ConfigError("alpha must be in [1, 6]");
  trial.r = view.number("r", 1.0);
  if (!(trial.r > 0.0)) throw ConfigError("r must be > 0");
  const std::vector<std::int64_t> m_list = view.integer_list(
      "m_list", {256, 512, 1024, 2048, 4096, 8192, 16384});
  trial.m_values.clear();
  for (const auto m : m_list) {
    if (m < 2 || m > (1 << 22)) throw ConfigError("m_list entries must be in [2, 2^22]");
    trial.m_values.push_back(static_cast<int>(m));
  }
  trial.eps_values = view.number_list("eps_list", {});
  for (const double e : trial.eps_values)
    if (!(e > 0.0)) throw ConfigError("eps_list entries must be > 0");
  trial.trials = static_cast<int>(view.integer("trials", 200));
  if (trial.trials < 30 || trial.trials > 100000)
    throw ConfigError("trials must be in [30, 100000]");
  trial.grid_resolution = static_cast<int>(view.integer("grid_resolution", 8));
  if (trial.grid_resolution < 1 || trial.grid_resolution > 32)
    throw ConfigError("grid_resolution must be in [1, 32]");
  trial.sphere_resolution = static_cast<int>(view.integer("sphere_resolution", 16));
  const std::string format = view.text("format", "csv");
  const std::string output_path = view.text("output_path", "");
  {
    // Validate the density reference; run_trials rebuilds it by id.
    barron::SourceDensity density = density_from_config(view, trial.n);
    trial.density_id = density.catalog_id;
  }
  trial.seed = resolve_seed(options, view, &resolved);
  view.done();
  trial.threads = options.threads;

  const rvfl::TrialReport report = rvfl::run_trials(trial);
  resolved["eps_list"] = report.config.eps_values;  // record derived defaults

  Table table;
  table.columns = {"kind",      "m",          "eps",       "q10",       "q25",
                   "q50",       "q75",        "q90",       "sup_max",   "exceed_rate",
                   "wilson_lo", "wilson_hi",  "bound",     "slope",     "lambda_cap",
                   "violations", "max_net",   "norm_1",    "norm_1_inf"};

  std::vector<std::string> notes;
  if (trial.alpha == 1)
    notes.push_back(
        "note: alpha = 1 is outside the exceedance theorem; bound column left empty");
  notes.push_back("note: coefficient mass " + format_double(report.total_mass) +
                  " = strip " + format_double(report.norm_1) + " + boundary " +
                  format_double(report.boundary_mass));

  for (std::size_t mi = 0; mi < trial.m_values.size(); ++mi) {
    const int m = trial.m_values[mi];
    double sup_max = 0.0;
    for (const double s : report.sup_errors[mi]) sup_max = std::max(sup_max, s);
    auto& row = table.add_row();
    row[0] = Cell("quantiles");
    row[1] = Cell(static_cast<double>(m));
    for (int q = 0; q < 5; ++q) row[3 + q] = Cell(report.quantiles[mi][static_cast<std::size_t>(q)]);
    row[8] = Cell(sup_max);
  }

  for (std::size_t mi = 0; mi < trial.m_values.size(); ++mi) {
    const int m = trial.m_values[mi];
    for (std::size_t ei = 0; ei < report.config.eps_values.size(); ++ei) {
      const double eps = report.config.eps_values[ei];
      const rvfl::WilsonInterval& w = report.exceedance[mi][ei];
      auto& row = table.add_row();
      row[0] = Cell("exceedance");
      row[1] = Cell(static_cast<double>(m));
      row[2] = Cell(eps);
      row[9] = Cell(w.freq);
      row[10] = Cell(w.lo);
      row[11] = Cell(w.hi);
      if (trial.alpha >= 2) {
        const bounds::RnnResult rb = bounds::rnn_bound(
            report.norm_1_inf, trial.r, trial.alpha, trial.n, m, eps, std::nullopt);
        row[12] = Cell(rb.bound_exact);
      }
    }
  }

  auto& summary = table.add_row();
  summary[0] = Cell("summary");
  summary[13] = Cell(report.slope);
  summary[14] = Cell(report.lambda_cap);
  summary[15] = Cell(static_cast<double>(report.bound_violations));
  summary[16] = Cell(report.max_net_value);
  summary[17] = Cell(report.norm_1);
  summary[18] = Cell(report.norm_1_inf);

  if (report.bound_violations != 0)
    throw SelfCheckError("rvfl: network values exceeded the almost-sure cap " +
                         format_double(report.lambda_cap) + " in " +
                         std::to_string(report.bound_violations) + " trials");

  emit(table, "rvfl", resolved, trial.seed, format, output_path, options.out_path,
       std::move(notes));
}

}  // namespace adz::cli
