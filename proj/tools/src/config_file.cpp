// Copyright 2026 The qkdsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "qkdsim/cli/config_file.hpp"

#include <fstream>
#include <set>

#include "qkdsim/config_fields.hpp"

namespace qkdsim::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError(std::string(key), "value '" + std::string(value) + "' must be true or false");
}

void assign(CliConfig& config, std::string_view key, std::string_view value) {
  if (key == "output") {
    config.output = std::string(value);
  } else if (key == "trace_output") {
    config.trace_output = std::string(value);
  } else if (key == "trace") {
    config.trace = parse_bool(key, value);
  } else {
    set_field(config.run, key, value);
  }
}

std::pair<std::string_view, std::string_view> split_assignment(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError(std::string(trim(text)), "expected 'key = value'");
  }
  const auto key = trim(text.substr(0, eq));
  if (key.empty()) throw ConfigError("", "missing key before '='");
  return {key, trim(text.substr(eq + 1))};
}

}  // namespace

ParseError::ParseError(std::string field, std::string_view source, std::size_t line,
                       const std::string& message)
    : ConfigError(std::move(field), message, std::string(source) + ":" + std::to_string(line)),
      line_(line) {}

CliConfig parse_config(std::istream& in, std::string_view source) {
  CliConfig config;
  std::set<std::string, std::less<>> seen;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    try {
      const auto [key, value] = split_assignment(line);
      if (!seen.emplace(key).second) throw ConfigError(std::string(key), "repeated key");
      assign(config, key, value);
    } catch (const ParseError&) {
      throw;
    } catch (const ConfigError& e) {
      const std::string what = e.what();
      const std::string prefix = e.field() + ": ";
      throw ParseError(e.field(), source, line_no,
                       what.starts_with(prefix) ? what.substr(prefix.size()) : what);
    }
  }
  validate(config.run);
  return config;
}

CliConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  return parse_config(in, path);
}

void apply_override(CliConfig& config, std::string_view assignment) {
  const auto [key, value] = split_assignment(assignment);
  assign(config, key, value);
}

}  // namespace qkdsim::cli
