// Copyright 2026 The qkdsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qkdsim/engine.hpp"

namespace qkdsim {

/// Dotted field paths of RunConfig, e.g. "apd.gate_width_ns".
std::vector<std::string_view> field_names();

/// Every numeric field; all of them can be swept.
std::vector<std::string_view> sweepable_fields();

bool is_sweepable(std::string_view name) noexcept;

/// Parses and range-checks one value. Throws ConfigError naming the field
/// and its valid range.
void set_field(RunConfig& config, std::string_view name, std::string_view value);

/// Numeric setter used by sweeps.
void set_numeric_field(RunConfig& config, std::string_view name, double value);

double get_numeric_field(const RunConfig& config, std::string_view name);

/// Textual value in the same syntax set_field accepts.
std::string format_field(const RunConfig& config, std::string_view name);

/// Throws ConfigError for the first field that violates its range.
void validate(const RunConfig& config);

Receiver parse_receiver(std::string_view text);

}  // namespace qkdsim
