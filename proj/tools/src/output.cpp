// Copyright 2026 the adz authors
// SPDX-License-Identifier: Apache-2.0
#include "output.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <ostream>
#include <stdexcept>

#include "adz/version.hpp"
#include "config.hpp"

namespace adz::cli {

std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv(std::ostream& os, const Table& table, const OutputRequest& request) {
  const char* eol = "\r\n";
  os << "# adz " << adz::version_string << eol;
  os << "# command: " << request.command << eol;
  os << "# config: " << request.resolved_config.dump() << eol;
  os << "# seed: " << request.seed << eol;
  for (const auto& note : request.notes) os << "# " << note << eol;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) os << ',';
    os << csv_escape(table.columns[i]);
  }
  os << eol;
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      switch (row[i].kind) {
        case Cell::Kind::empty:
          break;
        case Cell::Kind::number:
          os << format_double(row[i].num);
          break;
        case Cell::Kind::text:
          os << csv_escape(row[i].str);
          break;
      }
    }
    os << eol;
  }
}

void write_json(std::ostream& os, const Table& table, const OutputRequest& request) {
  nlohmann::json doc;
  doc["tool"] = "adz";
  doc["version"] = adz::version_string;
  doc["command"] = request.command;
  doc["config"] = request.resolved_config;
  doc["seed"] = request.seed;
  doc["notes"] = request.notes;
  doc["columns"] = table.columns;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& cell : row) {
      switch (cell.kind) {
        case Cell::Kind::empty:
          cells.push_back(nullptr);
          break;
        case Cell::Kind::number:
          cells.push_back(cell.num);
          break;
        case Cell::Kind::text:
          cells.push_back(cell.str);
          break;
      }
    }
    rows.push_back(std::move(cells));
  }
  doc["rows"] = std::move(rows);
  os << doc.dump(1) << "\n";
}

}  // namespace

std::size_t write_output(const Table& table, const OutputRequest& request) {
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size())
      throw std::logic_error("write_output: row width does not match the header");
  }
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (request.out_path && !request.out_path->empty()) {
    file.open(*request.out_path, std::ios::binary);
    if (!file) throw ConfigError("cannot open output file '" + *request.out_path + "'");
    os = &file;
  }
  if (request.format == "csv") {
    write_csv(*os, table, request);
  } else if (request.format == "json") {
    write_json(*os, table, request);
  } else {
    throw ConfigError("unknown output format '" + request.format + "' (expected csv or json)");
  }
  os->flush();
  if (!*os) throw std::runtime_error("failed while writing output");
  return table.rows.size();
}

void emit(const Table& table, const std::string& command,
          const nlohmann::json& resolved_config, std::uint64_t seed,
          const std::string& format, const std::string& config_output_path,
          const std::optional<std::string>& cli_out_path,
          std::vector<std::string> notes) {
  OutputRequest request;
  request.command = command;
  request.resolved_config = resolved_config;
  request.seed = seed;
  request.notes = std::move(notes);
  request.format = format;
  if (cli_out_path)
    request.out_path = cli_out_path;
  else if (!config_output_path.empty())
    request.out_path = config_output_path;
  const std::size_t rows = write_output(table, request);
  std::cerr << "adz " << command << ": " << rows << " rows written\n";
}

}  // namespace adz::cli
