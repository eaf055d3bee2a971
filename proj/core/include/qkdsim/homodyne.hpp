// Copyright 2026 The qkdsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qkdsim/protocol.hpp"
#include "qkdsim/rng.hpp"

namespace qkdsim {

/// Balanced PIN receiver beating the weak signal against a strong
/// interleaved reference. Samples are in photoelectron units.
struct HomodyneParams {
  double lo_mean_photons = 1e6;
  double quantum_efficiency = 0.8;
  double electronic_noise_ratio = 0.0;  // electronic variance / shot variance
  double cmrr_db = 30.0;
  double decision_threshold = 0.0;  // half-width of the symmetric dead zone
  double common_mode_sigma = 0.0;   // photoelectrons, before rejection
};

/// Noise power spectral densities at the receiver load.
struct NoiseBudget {
  double thermal_psd_dbm_per_hz = 0.0;
  double shot_psd_dbm_per_hz = 0.0;
  double margin_db = 0.0;
  double photocurrent_a = 0.0;
  double temperature_k = 0.0;
  double load_ohm = 0.0;
};

inline constexpr double kBoltzmann = 1.380649e-23;          // J/K
inline constexpr double kElementaryCharge = 1.602176634e-19;  // C

/// Mean of the balanced difference count, 2 eta overlap sqrt(N_LO n) cos(dphi).
double quadrature_mean(double n_signal, double delta_phi, const HomodyneParams& hp,
                       double overlap = 1.0);

/// Shot-noise standard deviation, sqrt(eta N_LO (1 + xi)).
double quadrature_sigma(const HomodyneParams& hp);

/// One balanced-difference sample (detector 1 minus detector 2).
double quadrature_sample(double n_signal, double delta_phi, const HomodyneParams& hp,
                         Rng& rng, double overlap = 1.0);

/// Above threshold -> One, below -threshold -> Zero, inside the dead zone
/// NoDetection. With threshold 0 a sample of exactly 0 reads One.
DetectionOutcome decide_sign(double sample, double threshold) noexcept;

/// Upper tail of the standard normal.
double gaussian_q(double x) noexcept;

/// Q(2 sqrt(eta n / (1 + xi))): sign-decision error rate at threshold 0.
double ber_theory(double n_signal, double eta, double xi);

/// Thermal kT and shot 2 q I R densities in dBm/Hz.
NoiseBudget noise_budget(double photocurrent_a, double temperature_k, double load_ohm);

double apply_common_mode(double sample, double common_mode_amplitude, double cmrr_db);

double watts_to_dbm(double watts) noexcept;

}  // namespace qkdsim
