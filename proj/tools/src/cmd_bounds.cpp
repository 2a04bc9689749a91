// Copyright 2026 the adz authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "adz/bounds.hpp"
#include "commands.hpp"

namespace adz::cli {
namespace {

void check_probability(double value) {
  if (!(value >= 0.0 && value <= 1.0))
    throw SelfCheckError("bounds: a probability column left [0, 1]: " +
                         format_double(value));
}

}  // namespace

void cmd_bounds(const CommonOptions& options) {
  const nlohmann::json config = load_config_file(options.config_path);
  nlohmann::json resolved = nlohmann::json::object();
  View view(config, "", &resolved);

  const bool greedy = view.boolean("greedy", true);
  const std::string format = view.text("format", "csv");
  const std::string output_path = view.text("output_path", "");
  const std::uint64_t seed = resolve_seed(options, view, &resolved);

  Table table;
  table.columns = {"kind",        "lambda",     "b",          "k",         "eps",
                   "n",           "r",          "zeta",       "delta",     "cover_lower",
                   "cover_upper", "cover_exact", "in_sandwich", "bound",    "bound_simplified",
                   "alpha",       "dim",        "m",          "eps_used",  "k_rate",
                   "lambda_cap",  "lipschitz",  "feasible"};

  bool any_section = false;
  if (const nlohmann::json* rows = view.raw_array("chernoff_rows")) {
    any_section = true;
    nlohmann::json resolved_rows = nlohmann::json::array();
    for (std::size_t i = 0; i < rows->size(); ++i) {
      nlohmann::json relem = nlohmann::json::object();
      View rv((*rows)[i], "chernoff_rows[" + std::to_string(i) + "]", &relem);
      bounds::BoundParams params;
      params.lambda = static_cast<int>(rv.integer("lambda"));
      params.b = rv.number("b");
      params.k = rv.number("k");
      params.eps = rv.number("eps");
      params.n = rv.number("n");
      params.r = rv.number("r", 1.0);
      rv.done();
      resolved_rows.push_back(relem);
      if (params.lambda < 1) throw ConfigError("chernoff_rows: lambda must be >= 1");

      auto& row = table.add_row();
      row[0] = Cell("chernoff");
      row[1] = Cell(static_cast<double>(params.lambda));
      row[2] = Cell(params.b);
      row[3] = Cell(params.k);
      row[4] = Cell(params.eps);
      row[5] = Cell(params.n);
      row[6] = Cell(params.r);
      try {
        const bounds::ZetaDelta zd =
            bounds::zeta_delta(params.lambda, params.b, params.k, params.eps, params.n);
        row[7] = Cell(zd.zeta);
        row[8] = Cell(zd.delta);
        bounds::CoveringResult cover;
        const bool try_greedy = greedy && params.lambda <= 3;
        try {
          cover = bounds::covering_number(params.lambda, params.r, zd.delta,
                                          try_greedy ? bounds::CoverMode::greedy
                                                     : bounds::CoverMode::formula);
        } catch (const std::domain_error&) {
          // The certified lattice would be too large at this delta; fall back
          // to the two-sided formula.
          cover = bounds::covering_number(params.lambda, params.r, zd.delta,
                                          bounds::CoverMode::formula);
        }
        row[9] = Cell(cover.lower);
        row[10] = Cell(cover.upper);
        if (cover.exact) {
          row[11] = Cell(static_cast<double>(*cover.exact));
          row[12] = Cell(cover.greedy_in_sandwich ? "true" : "false");
        }
        const double bound = bounds::chernoff_cover_bound(params);
        check_probability(bound);
        row[13] = Cell(bound);
        row[22] = Cell("true");
      } catch (const std::domain_error&) {
        row[22] = Cell("false");  // infeasible sample count: flagged, kept
      }
    }
    view.record_resolved("chernoff_rows", std::move(resolved_rows));
  }

  if (const nlohmann::json* rnn = view.raw_object("rnn")) {
    any_section = true;
    nlohmann::json rres = nlohmann::json::object();
    View rv(*rnn, "rnn", &rres);
    const int alpha = static_cast<int>(rv.integer("alpha"));
    const int dim = static_cast<int>(rv.integer("dim"));
    const double r = rv.number("r", 1.0);
    const double norm = rv.number("norm");
    const std::vector<std::int64_t> m_list = rv.integer_list("m_list");
    std::vector<double> eps_list;
    std::optional<double> k_rate;
    if (rv.has("eps_list") && rv.has("k_rate"))
      throw ConfigError("rnn: supply eps_list or k_rate, not both");
    if (rv.has("eps_list"))
      eps_list = rv.number_list("eps_list");
    else
      k_rate = rv.number("k_rate", 2.0);
    rv.done();
    view.record_resolved("rnn", std::move(rres));

    const auto add_rnn_row = [&](std::int64_t m, std::optional<double> eps) {
      const bounds::RnnResult rb =
          bounds::rnn_bound(norm, r, alpha, dim, m, eps, k_rate);
      check_probability(rb.bound_exact);
      check_probability(rb.bound_simplified);
      auto& row = table.add_row();
      row[0] = Cell("rnn");
      row[6] = Cell(r);
      row[13] = Cell(rb.bound_exact);
      row[14] = Cell(rb.bound_simplified);
      row[15] = Cell(static_cast<double>(alpha));
      row[16] = Cell(static_cast<double>(dim));
      row[17] = Cell(static_cast<double>(m));
      row[18] = Cell(rb.eps_used);
      row[19] = Cell(rb.k_rate);
      row[20] = Cell(rb.lambda_cap);
      row[21] = Cell(rb.lipschitz);
      row[22] = Cell(rb.feasible ? "true" : "false");
    };
    for (const auto m : m_list) {
      if (m < 2) throw ConfigError("rnn.m_list entries must be >= 2");
      if (eps_list.empty()) {
        add_rnn_row(m, std::nullopt);
      } else {
        for (const double eps : eps_list) add_rnn_row(m, eps);
      }
    }
  }

  if (!any_section)
    throw ConfigError("bounds config needs a chernoff_rows array or an rnn object");
  view.done();

  emit(table, "bounds", resolved, seed, format, output_path, options.out_path);
}

}  // namespace adz::cli
