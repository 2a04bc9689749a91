// Copyright 2026 the adz authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace adz::cli {

// Maps to exit code 2: the config file (or command line) is malformed.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Maps to exit code 3: a built-in numerical self-check failed.
class SelfCheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json load_config_file(const std::string& path);

// Strict-schema accessor over one JSON object.  Every key that is read is
// recorded (with the default applied) into `resolved`, and done() rejects
// keys that were never requested, so unknown keys in a config are errors and
// the output preamble carries the fully resolved configuration.
class View {
 public:
  View(const nlohmann::json& j, std::string path, nlohmann::json* resolved);

  bool has(const char* key) const;

  double number(const char* key);
  double number(const char* key, double fallback);
  std::int64_t integer(const char* key);
  std::int64_t integer(const char* key, std::int64_t fallback);
  std::uint64_t unsigned64(const char* key, std::uint64_t fallback);
  bool boolean(const char* key, bool fallback);
  std::string text(const char* key);
  std::string text(const char* key, const std::string& fallback);
  std::vector<double> number_list(const char* key);
  std::vector<double> number_list(const char* key, const std::vector<double>& fallback);
  std::vector<std::int64_t> integer_list(const char* key);
  std::vector<std::int64_t> integer_list(const char* key, const std::vector<std::int64_t>& fallback);

  // Child object (required, or defaulting to {}).  The returned View writes
  // into the matching subobject of `resolved`; call done() on it too.
  View child(const char* key);
  View child_or_empty(const char* key);

  // Raw access for array-of-object sections: marks the key as seen and
  // validates the JSON type; the caller validates elements and records the
  // resolved value itself via record_resolved.
  const nlohmann::json* raw_array(const char* key);   // nullptr when absent
  const nlohmann::json* raw_object(const char* key);  // nullptr when absent
  void record_resolved(const char* key, nlohmann::json value);

  // Throws ConfigError naming any key present in the JSON but never read.
  void done() const;

 private:
  const nlohmann::json& at(const char* key);
  void record(const char* key, nlohmann::json value);

  const nlohmann::json* j_;
  std::string path_;
  nlohmann::json* resolved_;
  std::set<std::string> seen_;
  nlohmann::json empty_ = nlohmann::json::object();
};

}  // namespace adz::cli
