// Copyright 2026 The qkdsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qkdsim {

/// Invalid run or CLI configuration. Carries the offending field path.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::invalid_argument(field.empty() ? message : field + ": " + message),
        field_(std::move(field)) {}

  /// Same, prefixed with a location such as "run.cfg:3".
  ConfigError(std::string field, const std::string& message, const std::string& location)
      : std::invalid_argument(location + ": " + field + ": " + message),
        field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace qkdsim
