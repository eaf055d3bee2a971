// Copyright 2026 The qkdsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qkdsim::cli {

/// RFC 4180 quoting: fields containing a comma, quote, CR or LF are quoted
/// and inner quotes doubled.
std::string csv_escape(std::string_view field);

/// Writes one '\n'-terminated record.
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);
void write_csv_row(std::ostream& out, std::initializer_list<std::string_view> fields);

}  // namespace qkdsim::cli
