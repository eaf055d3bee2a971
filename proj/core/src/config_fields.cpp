// Copyright 2026 The qkdsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "qkdsim/config_fields.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>

#include "qkdsim/error.hpp"
#include "qkdsim/format.hpp"

namespace qkdsim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Kind { Real, Count, Seed };

struct Range {
  double lo = 0.0;
  double hi = kInf;
  bool lo_open = false;
  bool hi_open = true;
};

struct Field {
  std::string_view name;
  Kind kind;
  Range range;
  bool allow_inf;
  double (*get)(const RunConfig&);
  void (*set)(RunConfig&, double);
};

#define QKDSIM_FIELD(path, member, kind, range, allow_inf)                     \
  Field {                                                                      \
    path, kind, range, allow_inf,                                              \
        [](const RunConfig& c) { return static_cast<double>(c.member); },      \
        [](RunConfig& c, double v) { c.member = static_cast<decltype(c.member)>(v); } \
  }

constexpr Range kNonNegative{0.0, kInf, false, true};
constexpr Range kPositive{0.0, kInf, true, true};
constexpr Range kUnit{0.0, 1.0, false, false};
constexpr Range kHalfOpenUnit{0.0, 1.0, true, false};
constexpr Range kPolarization{0.0, std::numbers::pi / 2.0, false, false};
constexpr Range kCount{1.0, 9007199254740992.0, false, false};
// Numeric (sweep) assignment of seeds is limited to exactly representable integers.
constexpr Range kSeed{0.0, 9007199254740992.0, false, false};
constexpr Range kAnyReal{-kInf, kInf, true, true};

const std::array kFields = {
    QKDSIM_FIELD("n_symbols", n_symbols, Kind::Count, kCount, false),
    QKDSIM_FIELD("mean_photons_per_bit", mean_photons_per_bit, Kind::Real, kNonNegative, false),
    QKDSIM_FIELD("rep_rate_hz", rep_rate_hz, Kind::Real, kPositive, false),
    QKDSIM_FIELD("seed", seed, Kind::Seed, kSeed, false),
    QKDSIM_FIELD("channel.loss_db", channel.loss_db, Kind::Real, kNonNegative, false),
    QKDSIM_FIELD("channel.drift_sigma", channel.drift_sigma, Kind::Real, kNonNegative, false),
    QKDSIM_FIELD("channel.pol_angle", channel.pol_angle, Kind::Real, kPolarization, false),
    QKDSIM_FIELD("channel.phase_mod_sigma", channel.phase_mod_sigma, Kind::Real, kNonNegative,
                 false),
    QKDSIM_FIELD("visibility.intrinsic_visibility", visibility.intrinsic_visibility, Kind::Real,
                 kUnit, false),
    QKDSIM_FIELD("visibility.extinction_ratio_db", visibility.extinction_ratio_db, Kind::Real,
                 kNonNegative, true),
    QKDSIM_FIELD("apd.quantum_efficiency", apd.quantum_efficiency, Kind::Real, kUnit, false),
    QKDSIM_FIELD("apd.dark_prob_per_gate", apd.dark_prob_per_gate, Kind::Real, kUnit, false),
    QKDSIM_FIELD("apd.gate_width_ns", apd.gate_width_ns, Kind::Real, kPositive, false),
    QKDSIM_FIELD("apd.dead_time_us", apd.dead_time_us, Kind::Real, kNonNegative, false),
    QKDSIM_FIELD("homodyne.lo_mean_photons", homodyne.lo_mean_photons, Kind::Real, kPositive,
                 false),
    QKDSIM_FIELD("homodyne.quantum_efficiency", homodyne.quantum_efficiency, Kind::Real,
                 kHalfOpenUnit, false),
    QKDSIM_FIELD("homodyne.electronic_noise_ratio", homodyne.electronic_noise_ratio, Kind::Real,
                 kNonNegative, false),
    QKDSIM_FIELD("homodyne.cmrr_db", homodyne.cmrr_db, Kind::Real, kNonNegative, true),
    QKDSIM_FIELD("homodyne.decision_threshold", homodyne.decision_threshold, Kind::Real,
                 kNonNegative, false),
    QKDSIM_FIELD("homodyne.common_mode_sigma", homodyne.common_mode_sigma, Kind::Real,
                 kNonNegative, false),
};

#undef QKDSIM_FIELD

constexpr std::string_view kReceiverKey = "receiver";

const Field* find_field(std::string_view name) noexcept {
  auto it = std::find_if(kFields.begin(), kFields.end(),
                         [&](const Field& f) { return f.name == name; });
  return it == kFields.end() ? nullptr : &*it;
}

std::string bound_text(double v) {
  if (v == kCount.hi) return "2^53";
  if (v == std::numbers::pi / 2.0) return "pi/2";
  return format_number(v);
}

std::string range_text(const Field& f) {
  const Range& r = f.range;
  const bool hi_inclusive = !r.hi_open || (std::isinf(r.hi) && f.allow_inf);
  return std::string(r.lo_open ? "(" : "[") + bound_text(r.lo) + ", " + bound_text(r.hi) +
         (hi_inclusive ? "]" : ")");
}

[[noreturn]] void out_of_range(const Field& f, std::string_view shown) {
  throw ConfigError(std::string(f.name), "value " + std::string(shown) +
                                             " is outside the valid range " + range_text(f));
}

void check_range(const Field& f, double v, std::string_view shown) {
  const Range& r = f.range;
  if (std::isnan(v)) out_of_range(f, shown);
  if (std::isinf(v) && !(f.allow_inf && v > 0)) out_of_range(f, shown);
  const bool lo_ok = r.lo_open ? v > r.lo : v >= r.lo;
  const bool hi_ok = (std::isinf(v) && f.allow_inf) || (r.hi_open ? v < r.hi : v <= r.hi);
  if (!lo_ok || !hi_ok) out_of_range(f, shown);
  if (f.kind != Kind::Real && std::floor(v) != v) {
    throw ConfigError(std::string(f.name),
                      "value " + std::string(shown) + " must be an integer in " + range_text(f));
  }
}

std::string known_fields_text() {
  std::string out(kReceiverKey);
  for (const auto& f : kFields) out += ", " + std::string(f.name);
  return out;
}

const Field& require_field(std::string_view name) {
  if (const Field* f = find_field(name)) return *f;
  throw ConfigError(std::string(name), "unknown field; known fields: " + known_fields_text());
}

}  // namespace

std::string_view to_string(Receiver r) noexcept {
  return r == Receiver::Homodyne ? "homodyne" : "photon_counting";
}

Receiver parse_receiver(std::string_view text) {
  if (text == "photon_counting") return Receiver::PhotonCounting;
  if (text == "homodyne") return Receiver::Homodyne;
  throw ConfigError(std::string(kReceiverKey),
                    "value '" + std::string(text) + "' must be photon_counting or homodyne");
}

std::vector<std::string_view> field_names() {
  std::vector<std::string_view> names{kReceiverKey};
  for (const auto& f : kFields) names.push_back(f.name);
  return names;
}

std::vector<std::string_view> sweepable_fields() {
  std::vector<std::string_view> names;
  for (const auto& f : kFields) names.push_back(f.name);
  return names;
}

bool is_sweepable(std::string_view name) noexcept { return find_field(name) != nullptr; }

void set_field(RunConfig& config, std::string_view name, std::string_view value) {
  if (name == kReceiverKey) {
    config.receiver = parse_receiver(value);
    return;
  }
  const Field& f = require_field(name);
  const char* first = value.data();
  const char* last = value.data() + value.size();
  if (f.kind == Kind::Real) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
      throw ConfigError(std::string(f.name),
                        "cannot parse '" + std::string(value) + "' as a number");
    }
    check_range(f, v, value);
    f.set(config, v);
    return;
  }
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw ConfigError(std::string(f.name), "cannot parse '" + std::string(value) +
                                               "' as an integer in " + range_text(f));
  }
  if (f.kind == Kind::Count && (v < 1 || static_cast<double>(v) > kCount.hi)) {
    out_of_range(f, value);
  }
  if (f.kind == Kind::Seed) {
    config.seed = v;
  } else {
    config.n_symbols = v;
  }
}

void set_numeric_field(RunConfig& config, std::string_view name, double value) {
  const Field& f = require_field(name);
  check_range(f, value, format_number(value));
  f.set(config, value);
}

double get_numeric_field(const RunConfig& config, std::string_view name) {
  return require_field(name).get(config);
}

std::string format_field(const RunConfig& config, std::string_view name) {
  if (name == kReceiverKey) return std::string(to_string(config.receiver));
  if (name == "seed") return format_number(config.seed);
  if (name == "n_symbols") return format_number(config.n_symbols);
  return format_number(require_field(name).get(config));
}

void validate(const RunConfig& config) {
  for (const auto& f : kFields) {
    if (f.kind != Kind::Real) continue;  // integer fields are range-checked on assignment
    const double v = f.get(config);
    check_range(f, v, format_number(v));
  }
  if (config.n_symbols < 1) throw ConfigError("n_symbols", "must be at least 1");
}

}  // namespace qkdsim
