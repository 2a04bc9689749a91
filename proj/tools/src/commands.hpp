// Copyright 2026 the adz authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "adz/barron.hpp"
#include "config.hpp"
#include "output.hpp"

namespace adz::cli {

using specfun::Cplx;

struct CommonOptions {
  std::string config_path;
  std::optional<std::string> out_path;
  std::optional<std::uint64_t> seed;  // overrides the config seed
  unsigned threads = 1;
};

void cmd_decompose(const CommonOptions& options);
void cmd_represent(const CommonOptions& options);
void cmd_rvfl(const CommonOptions& options);
void cmd_sigma(const CommonOptions& options);
void cmd_bounds(const CommonOptions& options);
void cmd_mellin_check(const CommonOptions& options);

// Shared helpers (defined in cmd_represent.cpp).
// Validates a config "density" object ({id, params}) and builds the density.
barron::SourceDensity density_from_config(View& view, int n);
// Resolves the seed (command line overrides config) and records it.
std::uint64_t resolve_seed(const CommonOptions& options, View& view,
                           nlohmann::json* resolved);

}  // namespace adz::cli
