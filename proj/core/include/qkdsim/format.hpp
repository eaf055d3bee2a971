// Copyright 2026 The qkdsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

namespace qkdsim {

/// Shortest round-trip decimal, independent of the global locale.
/// Non-finite values print as "nan", "inf", "-inf".
std::string format_number(double value);

std::string format_number(std::uint64_t value);

/// Fixed notation with the given number of decimals, locale independent.
std::string format_fixed(double value, int decimals);

}  // namespace qkdsim
