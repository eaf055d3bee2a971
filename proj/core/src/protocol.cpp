// Copyright 2026 The qkdsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "qkdsim/protocol.hpp"

#include <string>

#include "qkdsim/error.hpp"

namespace qkdsim {

std::string_view to_string(Basis b) noexcept { return b == Basis::B1 ? "B1" : "B2"; }

std::string_view to_string(Bit b) noexcept { return b == Bit::One ? "1" : "0"; }

std::string_view to_string(const DetectionOutcome& o) noexcept {
  if (const auto* bit = std::get_if<Bit>(&o)) return *bit == Bit::One ? "bit1" : "bit0";
  if (std::holds_alternative<Ambiguous>(o)) return "ambiguous";
  return "none";
}

double encode_phase(Basis basis, Bit bit) noexcept {
  return basis_offset(basis) + std::numbers::pi * bit_value(bit);
}

double bob_phase(Basis basis) noexcept { return basis_offset(basis); }

SymbolFrame make_frame(std::uint64_t index, Basis basis, Bit bit) noexcept {
  return {index, basis, bit, encode_phase(basis, bit)};
}

BobSetting make_setting(Basis basis) noexcept { return {basis, bob_phase(basis)}; }

DetectionOutcome decide_from_clicks(bool click1, bool click2) noexcept {
  if (click1 && click2) return Ambiguous{};
  if (click1) return Bit::Zero;
  if (click2) return Bit::One;
  return NoDetection{};
}

SiftResult sift(std::span<const SymbolFrame> frames,
                std::span<const BobSetting> settings,
                std::span<const DetectionOutcome> outcomes) {
  if (frames.size() != settings.size() || frames.size() != outcomes.size()) {
    throw ConfigError("sift", "length mismatch: " + std::to_string(frames.size()) +
                                  " frames, " + std::to_string(settings.size()) +
                                  " settings, " + std::to_string(outcomes.size()) +
                                  " outcomes");
  }
  SiftResult result;
  for (std::size_t i = 0; i < frames.size(); ++i) {
    if (frames[i].basis != settings[i].basis) {
      ++result.discarded_basis_mismatch;
    } else if (const auto* bit = std::get_if<Bit>(&outcomes[i])) {
      result.kept.push_back({frames[i].index, frames[i].bit, *bit});
    } else if (std::holds_alternative<Ambiguous>(outcomes[i])) {
      ++result.discarded_ambiguous;
    } else {
      ++result.discarded_no_detection;
    }
  }
  return result;
}

}  // namespace qkdsim
