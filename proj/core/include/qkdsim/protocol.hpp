// Copyright 2026 The qkdsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <numbers>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace qkdsim {

enum class Basis : std::uint8_t { B1, B2 };
enum class Bit : std::uint8_t { Zero, One };

constexpr int bit_value(Bit b) noexcept { return b == Bit::One ? 1 : 0; }
constexpr Bit bit_from(bool one) noexcept { return one ? Bit::One : Bit::Zero; }

/// Phase offset that selects the basis: B1 -> 0, B2 -> pi/2.
constexpr double basis_offset(Basis b) noexcept {
  return b == Basis::B1 ? 0.0 : std::numbers::pi / 2.0;
}

std::string_view to_string(Basis b) noexcept;
std::string_view to_string(Bit b) noexcept;

/// One symbol as prepared by Alice.
struct SymbolFrame {
  std::uint64_t index = 0;
  Basis basis = Basis::B1;
  Bit bit = Bit::Zero;
  double phase_a = 0.0;
};

/// Bob's measurement setting for one symbol.
struct BobSetting {
  Basis basis = Basis::B1;
  double phase_b = 0.0;
};

struct NoDetection {
  friend constexpr bool operator==(NoDetection, NoDetection) noexcept = default;
};
struct Ambiguous {
  friend constexpr bool operator==(Ambiguous, Ambiguous) noexcept = default;
};

/// Receiver verdict for one symbol. Ambiguous only comes from double clicks.
using DetectionOutcome = std::variant<Bit, NoDetection, Ambiguous>;

std::string_view to_string(const DetectionOutcome& o) noexcept;

struct SiftedBit {
  std::uint64_t index = 0;
  Bit alice_bit = Bit::Zero;
  Bit bob_bit = Bit::Zero;
};

struct SiftResult {
  std::vector<SiftedBit> kept;
  std::uint64_t discarded_basis_mismatch = 0;
  std::uint64_t discarded_no_detection = 0;
  std::uint64_t discarded_ambiguous = 0;

  std::uint64_t total() const noexcept {
    return kept.size() + discarded_basis_mismatch + discarded_no_detection +
           discarded_ambiguous;
  }
};

/// Alice's phase: basis_offset(basis) + pi * bit.
double encode_phase(Basis basis, Bit bit) noexcept;

/// Bob's phase for a basis choice; equals encode_phase(basis, Bit::Zero).
double bob_phase(Basis basis) noexcept;

SymbolFrame make_frame(std::uint64_t index, Basis basis, Bit bit) noexcept;
BobSetting make_setting(Basis basis) noexcept;

/// Detector 1 alone reads Zero, detector 2 alone reads One.
DetectionOutcome decide_from_clicks(bool click1, bool click2) noexcept;

/// Keeps matched-basis symbols with a Bit verdict. Basis mismatch takes
/// precedence over the detection status when counting discards, so the
/// four counters partition the input.
///
/// Throws ConfigError when the three sequences differ in length.
SiftResult sift(std::span<const SymbolFrame> frames,
                std::span<const BobSetting> settings,
                std::span<const DetectionOutcome> outcomes);

}  // namespace qkdsim
