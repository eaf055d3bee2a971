// Copyright 2026 The qkdsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "qkdsim/homodyne.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qkdsim {

double quadrature_mean(double n_signal, double delta_phi, const HomodyneParams& hp,
                       double overlap) {
  return 2.0 * hp.quantum_efficiency * overlap *
         std::sqrt(hp.lo_mean_photons * n_signal) * std::cos(delta_phi);
}

double quadrature_sigma(const HomodyneParams& hp) {
  return std::sqrt(hp.quantum_efficiency * hp.lo_mean_photons *
                   (1.0 + hp.electronic_noise_ratio));
}

double quadrature_sample(double n_signal, double delta_phi, const HomodyneParams& hp,
                         Rng& rng, double overlap) {
  if (!(n_signal >= 0.0)) {
    throw std::domain_error("quadrature_sample: signal photon number must be nonnegative");
  }
  std::normal_distribution<double> dist(quadrature_mean(n_signal, delta_phi, hp, overlap),
                                        quadrature_sigma(hp));
  return dist(rng);
}

DetectionOutcome decide_sign(double sample, double threshold) noexcept {
  if (threshold == 0.0) return sample >= 0.0 ? Bit::One : Bit::Zero;
  if (sample > threshold) return Bit::One;
  if (sample < -threshold) return Bit::Zero;
  return NoDetection{};
}

double gaussian_q(double x) noexcept { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double ber_theory(double n_signal, double eta, double xi) {
  if (!(n_signal >= 0.0) || !(eta > 0.0 && eta <= 1.0) || !(xi >= 0.0)) {
    throw std::domain_error("ber_theory: need n >= 0, eta in (0, 1], xi >= 0");
  }
  return gaussian_q(2.0 * std::sqrt(eta * n_signal / (1.0 + xi)));
}

double watts_to_dbm(double watts) noexcept { return 10.0 * std::log10(watts / 1e-3); }

NoiseBudget noise_budget(double photocurrent_a, double temperature_k, double load_ohm) {
  if (!(photocurrent_a > 0.0) || !(temperature_k > 0.0) || !(load_ohm > 0.0)) {
    throw std::domain_error("noise_budget: current, temperature and load must be positive");
  }
  NoiseBudget nb;
  nb.photocurrent_a = photocurrent_a;
  nb.temperature_k = temperature_k;
  nb.load_ohm = load_ohm;
  nb.thermal_psd_dbm_per_hz = watts_to_dbm(kBoltzmann * temperature_k);
  nb.shot_psd_dbm_per_hz = watts_to_dbm(2.0 * kElementaryCharge * photocurrent_a * load_ohm);
  nb.margin_db = nb.shot_psd_dbm_per_hz - nb.thermal_psd_dbm_per_hz;
  return nb;
}

double apply_common_mode(double sample, double common_mode_amplitude, double cmrr_db) {
  if (!(cmrr_db >= 0.0)) throw std::domain_error("apply_common_mode: cmrr_db must be >= 0");
  return sample + common_mode_amplitude * std::pow(10.0, -cmrr_db / 20.0);
}

}  // namespace qkdsim
