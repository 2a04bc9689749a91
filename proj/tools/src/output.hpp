// Copyright 2026 the adz authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace adz::cli {

// One output cell: a double, a string, or empty.  Kept tagged (rather than
// preformatted) so the CSV and JSON writers can serialize natively.
struct Cell {
  enum class Kind { empty, number, text } kind = Kind::empty;
  double num = 0.0;
  std::string str;

  Cell() = default;
  Cell(double v) : kind(Kind::number), num(v) {}
  Cell(std::string v) : kind(Kind::text), str(std::move(v)) {}
  Cell(const char* v) : kind(Kind::text), str(v) {}
  static Cell none() { return Cell(); }
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  std::vector<Cell>& add_row() {
    rows.emplace_back(columns.size());
    return rows.back();
  }
};

// Shortest round-trip decimal representation (std::to_chars).
std::string format_double(double value);

struct OutputRequest {
  std::string command;
  nlohmann::json resolved_config;   // includes every applied default
  std::uint64_t seed = 0;
  std::vector<std::string> notes;   // extra provenance lines
  std::string format = "csv";       // "csv" | "json"
  std::optional<std::string> out_path;  // empty -> stdout
};

// Writes the table in the requested format.  CSV follows RFC 4180 (CRLF line
// ends, quoted fields where needed) preceded by '#'-prefixed provenance
// lines; JSON carries the same payload as one document.  Returns the number
// of data rows written; wall-clock timing is the caller's to report (on
// stderr, never inside the file, so reruns are byte-identical).
std::size_t write_output(const Table& table, const OutputRequest& request);

// Assembles an OutputRequest from the pieces every command resolves the same
// way (--out beats the config's output_path) and writes the table.
void emit(const Table& table, const std::string& command,
          const nlohmann::json& resolved_config, std::uint64_t seed,
          const std::string& format, const std::string& config_output_path,
          const std::optional<std::string>& cli_out_path,
          std::vector<std::string> notes = {});

}  // namespace adz::cli
