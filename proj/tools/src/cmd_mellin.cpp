// Copyright 2026 the adz authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <string>
#include <vector>

#include "adz/mellin.hpp"
#include "commands.hpp"

namespace adz::cli {

void cmd_mellin_check(const CommonOptions& options) {
  const nlohmann::json config = load_config_file(options.config_path);
  nlohmann::json resolved = nlohmann::json::object();
  View view(config, "", &resolved);

  const std::vector<std::int64_t> n_list = view.integer_list("n_list", {2, 3});
  for (const auto n : n_list)
    if (n < 2 || n > 8) throw ConfigError("n_list entries must be in [2, 8]");
  const int l_max = static_cast<int>(view.integer("l_max", 6));
  if (l_max < 0 || l_max > 64) throw ConfigError("l_max must be in [0, 64]");
  const std::vector<double> y_list = view.number_list("y_list", {0.0, 0.5, 2.0});
  const int alpha_max = static_cast<int>(view.integer("alpha_max", 6));
  if (alpha_max < 1 || alpha_max > 8) throw ConfigError("alpha_max must be in [1, 8]");
  const int k_max = static_cast<int>(view.integer("k_max", 8));
  if (k_max < 0 || k_max > 16) throw ConfigError("k_max must be in [0, 16]");
  const double asym_y = view.number("asym_y", 1e4);
  if (!(std::abs(asym_y) >= 10.0)) throw ConfigError("asym_y must satisfy |y| >= 10");
  const int asym_l_max = static_cast<int>(view.integer("asym_l_max", 4));
  const int asym_alpha_max = static_cast<int>(view.integer("asym_alpha_max", 3));
  if (asym_alpha_max < 1) throw ConfigError("asym_alpha_max must be >= 1");
  const std::string format = view.text("format", "csv");
  const std::string output_path = view.text("output_path", "");
  const std::uint64_t seed = resolve_seed(options, view, &resolved);
  view.done();

  Table table;
  table.columns = {"kind", "l", "alpha", "n", "k", "y", "value"};

  for (const auto n : n_list) {
    for (int l = 0; l <= l_max; ++l) {
      for (const double y : y_list) {
        const double residual =
            mellin::multiplier_inverse_identity(l, static_cast<int>(n), y);
        auto& row = table.add_row();
        row[0] = Cell("inverse");
        row[1] = Cell(static_cast<double>(l));
        row[3] = Cell(static_cast<double>(n));
        row[5] = Cell(y);
        row[6] = Cell(residual);
        if (!(residual < 1e-8))
          throw SelfCheckError("mellin-check: inverse identity residual " +
                               format_double(residual) + " at l=" + std::to_string(l) +
                               " n=" + std::to_string(n) + " y=" + format_double(y));
      }
    }
  }

  for (int alpha = 1; alpha <= alpha_max; ++alpha) {
    for (int k = 0; k <= k_max; ++k) {
      const double residual = mellin::operator_identity_check(alpha, k);
      auto& row = table.add_row();
      row[0] = Cell("operator");
      row[2] = Cell(static_cast<double>(alpha));
      row[4] = Cell(static_cast<double>(k));
      row[6] = Cell(residual);
      if (residual != 0.0)
        throw SelfCheckError("mellin-check: operator identity residual nonzero at alpha=" +
                             std::to_string(alpha) + " k=" + std::to_string(k));
    }
  }

  for (const auto n : n_list) {
    for (int l = 0; l <= asym_l_max; ++l) {
      for (int alpha = 1; alpha <= asym_alpha_max; ++alpha) {
        mellin::MultiplierSpec spec;
        spec.l = l;
        spec.alpha = alpha;
        spec.n = static_cast<int>(n);
        const double ratio = mellin::asymptotic_ratio(spec, asym_y);
        auto& row = table.add_row();
        row[0] = Cell("asym");
        row[1] = Cell(static_cast<double>(l));
        row[2] = Cell(static_cast<double>(alpha));
        row[3] = Cell(static_cast<double>(n));
        row[5] = Cell(asym_y);
        row[6] = Cell(ratio);
        if (!(std::abs(ratio - 1.0) <= 0.02))
          throw SelfCheckError("mellin-check: asymptotic ratio " + format_double(ratio) +
                               " off by more than 2% at l=" + std::to_string(l) +
                               " alpha=" + std::to_string(alpha) +
                               " n=" + std::to_string(n));
      }
    }
  }

  emit(table, "mellin-check", resolved, seed, format, output_path, options.out_path);
}

}  // namespace adz::cli
