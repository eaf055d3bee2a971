// Copyright 2026 The qkdsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "qkdsim/cli/csv.hpp"

namespace qkdsim::cli {

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {
template <typename Range>
void write_row(std::ostream& out, const Range& fields) {
  bool first = true;
  for (const auto& f : fields) {
    if (!first) out << ',';
    out << csv_escape(f);
    first = false;
  }
  out << '\n';
}
}  // namespace

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  write_row(out, fields);
}

void write_csv_row(std::ostream& out, std::initializer_list<std::string_view> fields) {
  write_row(out, fields);
}

}  // namespace qkdsim::cli
