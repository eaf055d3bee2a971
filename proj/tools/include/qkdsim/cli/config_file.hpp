// Copyright 2026 The qkdsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>

#include "qkdsim/engine.hpp"
#include "qkdsim/error.hpp"

namespace qkdsim::cli {

/// A run configuration plus the CLI's own output settings.
struct CliConfig {
  RunConfig run;
  std::string output;        // stats / table CSV; empty means stdout
  std::string trace_output;  // per-symbol CSV written by `run` when trace is on
  bool trace = false;
};

/// ConfigError raised while reading a config file, with its location.
class ParseError : public ConfigError {
 public:
  ParseError(std::string field, std::string_view source, std::size_t line,
             const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Reads `key = value` lines. '#' starts a comment. Unknown and repeated
/// keys are rejected, every value is range-checked.
CliConfig parse_config(std::istream& in, std::string_view source = "<config>");

CliConfig load_config(const std::string& path);

/// Applies one `key=value` override, with the same checks as the file.
void apply_override(CliConfig& config, std::string_view assignment);

}  // namespace qkdsim::cli
