// Copyright 2026 The qkdsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "qkdsim/engine.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

#include "qkdsim/config_fields.hpp"
#include "qkdsim/error.hpp"

namespace qkdsim {

namespace {

constexpr std::size_t kChunk = 4096;

// Balanced receiver output is read as detector 2 minus detector 1.
constexpr double kReceiverPolarity = -1.0;

Basis draw_basis(Rng& rng) { return coin(rng) ? Basis::B2 : Basis::B1; }

struct Counters {
  RunStats stats;

  void absorb(const SiftResult& r) {
    stats.sifted += r.kept.size();
    stats.discarded_basis += r.discarded_basis_mismatch;
    stats.discarded_no_detection += r.discarded_no_detection;
    stats.discarded_ambiguous += r.discarded_ambiguous;
    for (const auto& k : r.kept) {
      if (k.alice_bit != k.bob_bit) ++stats.errors;
    }
  }

  RunStats finish(double rep_rate_hz) && {
    if (stats.sifted > 0) {
      stats.qber = static_cast<double>(stats.errors) / static_cast<double>(stats.sifted);
    }
    const double duration_s = static_cast<double>(stats.sent) / rep_rate_hz;
    stats.raw_detection_rate_hz = static_cast<double>(stats.detected) / duration_s;
    stats.sifted_key_rate_hz = static_cast<double>(stats.sifted) / duration_s;
    return stats;
  }
};

// Probability that a Gaussian receiver sample leaves the dead zone.
double homodyne_decide_prob(double mean, double sigma, double threshold) {
  if (threshold == 0.0) return 1.0;
  return gaussian_q((threshold - mean) / sigma) + gaussian_q((threshold + mean) / sigma);
}

}  // namespace

RunResult run(const RunConfig& config, std::size_t trace_limit) {
  validate(config);

  Rng alice = make_stream(config.seed, Stream::Alice);
  Rng bob = make_stream(config.seed, Stream::Bob);
  Rng optics = make_stream(config.seed, Stream::Optics);
  Rng detector = make_stream(config.seed, Stream::Detector);

  ApdParams apd = config.apd;
  apd.rep_rate_hz = config.rep_rate_hz;
  const HomodyneParams& hp = config.homodyne;
  const ChannelParams& ch = config.channel;

  const double mu = apply_loss(config.mean_photons_per_bit, ch.loss_db);
  // Equal split between the two time-multiplexed pulses: the balance factor is 1.
  const double pc_visibility = effective_visibility(config.visibility, ch.pol_angle, 1.0, 1.0);
  const double hd_overlap = mode_overlap(config.visibility, ch.pol_angle);

  RunResult result;
  result.trace.reserve(std::min<std::uint64_t>(trace_limit, config.n_symbols));
  Counters counters;

  std::vector<SymbolFrame> frames;
  std::vector<BobSetting> settings;
  std::vector<DetectionOutcome> outcomes;
  frames.reserve(kChunk);
  settings.reserve(kChunk);
  outcomes.reserve(kChunk);

  DriftState drift;
  std::optional<std::uint64_t> last_click;

  for (std::uint64_t start = 0; start < config.n_symbols; start += kChunk) {
    const std::uint64_t stop = std::min<std::uint64_t>(start + kChunk, config.n_symbols);
    frames.clear();
    settings.clear();
    outcomes.clear();

    for (std::uint64_t i = start; i < stop; ++i) {
      const Basis a_basis = draw_basis(alice);
      const Bit a_bit = bit_from(coin(alice));
      const SymbolFrame frame = make_frame(i, a_basis, a_bit);
      const BobSetting setting = make_setting(draw_basis(bob));

      drift = advance_drift(drift, ch.drift_sigma, optics);
      const double phase = perturb_phase(frame.phase_a, ch.phase_mod_sigma, drift, optics);
      const double delta_phi = wrap_phase(phase - setting.phase_b);

      DetectionOutcome outcome = NoDetection{};
      std::optional<double> sample;
      std::optional<ClickPair> clicks;

      if (config.receiver == Receiver::PhotonCounting) {
        const PulsePair pulses{mu / 2.0, mu / 2.0, delta_phi, ch.pol_angle};
        const PortMeans ports = port_means(pulses, pc_visibility);
        const bool gate_open = dead_time_gating(last_click, i, apd);
        const ClickPair c = sample_clicks(ports.m1, ports.m2, apd, gate_open, detector);
        if (c.any()) last_click = i;
        outcome = decide_from_clicks(c.click1, c.click2);
        clicks = c;
      } else {
        double x = quadrature_sample(mu, delta_phi, hp, detector, hd_overlap);
        if (hp.common_mode_sigma > 0.0) {
          x = apply_common_mode(x, normal_draw(detector, hp.common_mode_sigma), hp.cmrr_db);
        }
        const double y = kReceiverPolarity * x;
        outcome = decide_sign(y, hp.decision_threshold);
        sample = y;
      }

      if (std::holds_alternative<Bit>(outcome)) ++counters.stats.detected;
      if (i < trace_limit) {
        result.trace.push_back(
            {i, frame.basis, frame.bit, setting.basis, outcome, sample, clicks});
      }
      frames.push_back(frame);
      settings.push_back(setting);
      outcomes.push_back(outcome);
    }
    counters.stats.sent += stop - start;
    counters.absorb(sift(frames, settings, outcomes));
  }

  result.stats = std::move(counters).finish(config.rep_rate_hz);
  return result;
}

std::vector<SweepRow> sweep(const RunConfig& base, std::string_view parameter,
                            std::span<const double> values, SweepOptions options) {
  if (!is_sweepable(parameter)) {
    std::string names;
    for (auto n : sweepable_fields()) names += (names.empty() ? "" : ", ") + std::string(n);
    throw ConfigError(std::string(parameter), "not a sweepable parameter; choose one of: " + names);
  }
  if (values.empty()) throw ConfigError(std::string(parameter), "sweep needs at least one value");

  // Materialize every config up front so range errors surface before any run.
  std::vector<RunConfig> configs;
  configs.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    RunConfig c = base;
    set_numeric_field(c, parameter, values[i]);
    c.seed = derive_seed(c.seed, i);
    validate(c);
    configs.push_back(c);
  }

  std::vector<SweepRow> rows(values.size());
  const unsigned workers =
      std::clamp<unsigned>(options.threads, 1u, static_cast<unsigned>(values.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < values.size(); ++i) rows[i] = {values[i], run(configs[i]).stats};
    return rows;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < values.size(); i = next++) {
          try {
            rows[i] = {values[i], run(configs[i]).stats};
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

ExpectedRates expected_rates(const RunConfig& config) {
  validate(config);
  const double mu = apply_loss(config.mean_photons_per_bit, config.channel.loss_db);
  // Uniform independent bases: delta_phi is 0, pi (matched) or +-pi/2
  // (mismatched), each with probability 1/4.
  constexpr std::array<double, 2> kMatched{0.0, std::numbers::pi};

  if (config.receiver == Receiver::PhotonCounting) {
    ApdParams apd = config.apd;
    apd.rep_rate_hz = config.rep_rate_hz;
    const double v = effective_visibility(config.visibility, config.channel.pol_angle, 1.0, 1.0);
    double p_any = 0.0;
    double p_single_matched = 0.0;
    double p_single_mismatched = 0.0;
    auto accumulate = [&](double dphi, double& p_single) {
      const PortMeans ports = port_means(mu / 2.0, mu / 2.0, dphi, v);
      const double p1 = click_prob(ports.m1, apd);
      const double p2 = click_prob(ports.m2, apd);
      p_any += 0.25 * (1.0 - (1.0 - p1) * (1.0 - p2));
      p_single += 0.25 * (p1 * (1.0 - p2) + p2 * (1.0 - p1));
    };
    for (double d : kMatched) accumulate(d, p_single_matched);
    accumulate(std::numbers::pi / 2.0, p_single_mismatched);
    accumulate(3.0 * std::numbers::pi / 2.0, p_single_mismatched);
    if (p_any == 0.0) return {};
    // Dead time throttles triggering events; the single-click share of the
    // surviving gates is unchanged.
    const double triggers_hz = max_count_rate(apd, p_any);
    return {triggers_hz * (p_single_matched + p_single_mismatched) / p_any,
            triggers_hz * p_single_matched / p_any};
  }

  const HomodyneParams& hp = config.homodyne;
  const double overlap = mode_overlap(config.visibility, config.channel.pol_angle);
  const double sigma = quadrature_sigma(hp);
  double p_matched = 0.0;
  for (double d : kMatched) {
    p_matched += 0.25 * homodyne_decide_prob(quadrature_mean(mu, d, hp, overlap), sigma,
                                             hp.decision_threshold);
  }
  // cos(+-pi/2) carries no signal.
  const double p_mismatched =
      0.5 * homodyne_decide_prob(0.0, sigma, hp.decision_threshold);
  return {config.rep_rate_hz * (p_matched + p_mismatched), config.rep_rate_hz * p_matched};
}

}  // namespace qkdsim
