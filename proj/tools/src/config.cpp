// Copyright 2026 the adz authors
// SPDX-License-Identifier: Apache-2.0
#include "config.hpp"

#include <fstream>

namespace adz::cli {

namespace {

std::string key_path(const std::string& base, const char* key) {
  return base.empty() ? std::string(key) : base + "." + key;
}

[[noreturn]] void type_error(const std::string& path, const char* expected) {
  throw ConfigError("config field '" + path + "': expected " + expected);
}

}  // namespace

nlohmann::json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
}

View::View(const nlohmann::json& j, std::string path, nlohmann::json* resolved)
    : j_(&j), path_(std::move(path)), resolved_(resolved) {
  if (!j.is_object())
    throw ConfigError("config field '" + (path_.empty() ? std::string("<root>") : path_) +
                      "': expected an object");
}

bool View::has(const char* key) const { return j_->contains(key); }

const nlohmann::json& View::at(const char* key) {
  seen_.insert(key);
  return j_->at(key);
}

void View::record(const char* key, nlohmann::json value) {
  seen_.insert(key);
  (*resolved_)[key] = std::move(value);
}

double View::number(const char* key) {
  if (!has(key)) throw ConfigError("config field '" + key_path(path_, key) + "' is required");
  const auto& v = at(key);
  if (!v.is_number()) type_error(key_path(path_, key), "a number");
  record(key, v);
  return v.get<double>();
}

double View::number(const char* key, double fallback) {
  if (!has(key)) {
    record(key, fallback);
    return fallback;
  }
  return number(key);
}

std::int64_t View::integer(const char* key) {
  if (!has(key)) throw ConfigError("config field '" + key_path(path_, key) + "' is required");
  const auto& v = at(key);
  if (!v.is_number_integer()) type_error(key_path(path_, key), "an integer");
  record(key, v);
  return v.get<std::int64_t>();
}

std::int64_t View::integer(const char* key, std::int64_t fallback) {
  if (!has(key)) {
    record(key, fallback);
    return fallback;
  }
  return integer(key);
}

std::uint64_t View::unsigned64(const char* key, std::uint64_t fallback) {
  if (!has(key)) {
    record(key, fallback);
    return fallback;
  }
  const auto& v = at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    type_error(key_path(path_, key), "a nonnegative integer");
  record(key, v);
  return v.get<std::uint64_t>();
}

bool View::boolean(const char* key, bool fallback) {
  if (!has(key)) {
    record(key, fallback);
    return fallback;
  }
  const auto& v = at(key);
  if (!v.is_boolean()) type_error(key_path(path_, key), "a boolean");
  record(key, v);
  return v.get<bool>();
}

std::string View::text(const char* key) {
  if (!has(key)) throw ConfigError("config field '" + key_path(path_, key) + "' is required");
  const auto& v = at(key);
  if (!v.is_string()) type_error(key_path(path_, key), "a string");
  record(key, v);
  return v.get<std::string>();
}

std::string View::text(const char* key, const std::string& fallback) {
  if (!has(key)) {
    record(key, fallback);
    return fallback;
  }
  return text(key);
}

std::vector<double> View::number_list(const char* key) {
  if (!has(key)) throw ConfigError("config field '" + key_path(path_, key) + "' is required");
  const auto& v = at(key);
  if (!v.is_array()) type_error(key_path(path_, key), "an array of numbers");
  std::vector<double> out;
  for (const auto& item : v) {
    if (!item.is_number()) type_error(key_path(path_, key), "an array of numbers");
    out.push_back(item.get<double>());
  }
  record(key, v);
  return out;
}

std::vector<double> View::number_list(const char* key, const std::vector<double>& fallback) {
  if (!has(key)) {
    record(key, fallback);
    return fallback;
  }
  return number_list(key);
}

std::vector<std::int64_t> View::integer_list(const char* key) {
  if (!has(key)) throw ConfigError("config field '" + key_path(path_, key) + "' is required");
  const auto& v = at(key);
  if (!v.is_array()) type_error(key_path(path_, key), "an array of integers");
  std::vector<std::int64_t> out;
  for (const auto& item : v) {
    if (!item.is_number_integer()) type_error(key_path(path_, key), "an array of integers");
    out.push_back(item.get<std::int64_t>());
  }
  record(key, v);
  return out;
}

std::vector<std::int64_t> View::integer_list(const char* key,
                                             const std::vector<std::int64_t>& fallback) {
  if (!has(key)) {
    record(key, fallback);
    return fallback;
  }
  return integer_list(key);
}

View View::child(const char* key) {
  if (!has(key)) throw ConfigError("config field '" + key_path(path_, key) + "' is required");
  const auto& v = at(key);
  if (!v.is_object()) type_error(key_path(path_, key), "an object");
  (*resolved_)[key] = nlohmann::json::object();
  return View(v, key_path(path_, key), &(*resolved_)[key]);
}

View View::child_or_empty(const char* key) {
  if (!has(key)) {
    record(key, nlohmann::json::object());
    return View(empty_, key_path(path_, key), &(*resolved_)[key]);
  }
  return child(key);
}

const nlohmann::json* View::raw_array(const char* key) {
  if (!has(key)) return nullptr;
  const auto& v = at(key);
  if (!v.is_array()) type_error(key_path(path_, key), "an array");
  return &v;
}

const nlohmann::json* View::raw_object(const char* key) {
  if (!has(key)) return nullptr;
  const auto& v = at(key);
  if (!v.is_object()) type_error(key_path(path_, key), "an object");
  return &v;
}

void View::record_resolved(const char* key, nlohmann::json value) {
  record(key, std::move(value));
}

void View::done() const {
  for (auto it = j_->begin(); it != j_->end(); ++it) {
    if (!seen_.count(it.key()))
      throw ConfigError("config field '" + key_path(path_, it.key().c_str()) +
                        "' is not recognized");
  }
}

}  // namespace adz::cli
