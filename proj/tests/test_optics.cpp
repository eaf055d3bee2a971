// Copyright 2026 The qkdsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <limits>
#include <numbers>

#include "oracles.hpp"
#include "qkdsim/optics.hpp"

namespace qkdsim {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

TEST(ApplyLoss, Examples) {
  EXPECT_DOUBLE_EQ(apply_loss(1.0, 0.0), 1.0);
  EXPECT_NEAR(apply_loss(1.0, 10.0), 0.1, 1e-15);
  EXPECT_NEAR(apply_loss(2.0, 3.0), 1.0023744672545445, 1e-14);
}

TEST(ApplyLoss, NegativeInputsThrow) {
  EXPECT_THROW(apply_loss(-1.0, 0.0), std::domain_error);
  EXPECT_THROW(apply_loss(1.0, -0.5), std::domain_error);
}

TEST(ApplyLoss, ComposesAdditively) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> mu(0.0, 10.0), db(0.0, 30.0);
  for (int i = 0; i < 1000; ++i) {
    const double m = mu(rng), a = db(rng), b = db(rng);
    const double two_step = apply_loss(apply_loss(m, a), b);
    EXPECT_NEAR(two_step, apply_loss(m, a + b), 1e-13 * std::max(1.0, m));
  }
}

TEST(AdvanceDrift, ZeroSigmaIsIdentity) {
  Rng rng(1);
  EXPECT_EQ(advance_drift({0.3}, 0.0, rng).phase_offset, 0.3);
}

TEST(AdvanceDrift, IncrementMeanIsZero) {
  Rng rng(5);
  constexpr int kN = 200000;
  constexpr double kSigma = 0.2;
  double sum = 0.0;
  for (int i = 0; i < kN; ++i) sum += advance_drift({}, kSigma, rng).phase_offset;
  EXPECT_NEAR(sum / kN, 0.0, 3.0 * kSigma / std::sqrt(kN));
}

// Wiener contract: after k steps the offset variance is k sigma^2.
TEST(AdvanceDrift, VarianceGrowsLinearly) {
  constexpr int kSteps = 10000;
  constexpr double kSigma = 0.01;
  constexpr int kRuns = 2000;
  double sum = 0.0, sum2 = 0.0;
  for (int r = 0; r < kRuns; ++r) {
    Rng rng(1000 + r);
    DriftState d;
    for (int k = 0; k < kSteps; ++k) d = advance_drift(d, kSigma, rng);
    sum += d.phase_offset;
    sum2 += d.phase_offset * d.phase_offset;
  }
  const double mean = sum / kRuns;
  const double var = sum2 / kRuns - mean * mean;
  // Relative standard error of a sample variance is sqrt(2 / N).
  EXPECT_NEAR(var, 1.0, 4.0 * std::sqrt(2.0 / kRuns));
}

TEST(EffectiveVisibility, Examples) {
  const VisibilityParams ideal{1.0, kInf};
  EXPECT_DOUBLE_EQ(effective_visibility(ideal, 0.0, 0.05, 0.05), 1.0);
  EXPECT_NEAR(effective_visibility(ideal, kPi / 2.0, 0.05, 0.05), 0.0, 1e-16);
  EXPECT_NEAR(effective_visibility(ideal, kPi / 2.0, 3.0, 0.2), 0.0, 1e-16);
  EXPECT_NEAR(effective_visibility(ideal, 0.0, 1.0, 0.9), 0.9986139979479093, 1e-14);
}

TEST(EffectiveVisibility, ExtinctionAndIntrinsicFactors) {
  EXPECT_NEAR(effective_visibility({0.9, kInf}, 0.0, 1.0, 1.0), 0.9, 1e-15);
  EXPECT_NEAR(effective_visibility({1.0, 20.0}, 0.0, 1.0, 1.0), 0.99, 1e-15);
  EXPECT_NEAR(effective_visibility({1.0, 0.0}, 0.0, 1.0, 1.0), 0.0, 1e-15);
}

TEST(EffectiveVisibility, BothZeroThrows) {
  EXPECT_THROW(effective_visibility({}, 0.0, 0.0, 0.0), std::domain_error);
}

TEST(EffectiveVisibility, MaximalAtBalanceAndAlignedPolarization) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.01, 2.0), pol(0.0, kPi / 2.0);
  const VisibilityParams vp{0.95, 25.0};
  const double best = effective_visibility(vp, 0.0, 1.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    EXPECT_LE(effective_visibility(vp, pol(rng), u(rng), u(rng)), best + 1e-15);
  }
}

TEST(PortMeans, Examples) {
  auto p = port_means(0.05, 0.05, 0.0, 1.0);
  EXPECT_NEAR(p.m1, 0.1, 1e-15);
  EXPECT_NEAR(p.m2, 0.0, 1e-15);
  p = port_means(0.05, 0.05, kPi / 2.0, 1.0);
  EXPECT_NEAR(p.m1, 0.05, 1e-15);
  EXPECT_NEAR(p.m2, 0.05, 1e-15);
  p = port_means(0.05, 0.05, kPi, 0.9);
  EXPECT_NEAR(p.m1, 0.005, 1e-15);
  EXPECT_NEAR(p.m2, 0.095, 1e-15);
}

TEST(PortMeans, MatchesBeamSplitterAlgebra) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> mu(0.0, 3.0), phase(0.0, 2 * kPi), vis(0.0, 1.0);
  for (int i = 0; i < 5000; ++i) {
    const double s = mu(rng), r = mu(rng), d = phase(rng), v = vis(rng);
    const auto p = port_means(s, r, d, v);
    const auto ref = oracle::beam_splitter_ports(s, r, d, v);
    EXPECT_NEAR(p.m1, ref[0], 1e-12);
    EXPECT_NEAR(p.m2, ref[1], 1e-12);
  }
}

TEST(PortMeans, ConservationSymmetryAndPositivity) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> mu(0.0, 5.0), phase(0.0, 2 * kPi), vis(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const double s = mu(rng), r = mu(rng), d = phase(rng), v = vis(rng);
    const auto p = port_means(s, r, d, v);
    EXPECT_NEAR(p.m1 + p.m2, s + r, 1e-12);
    EXPECT_GE(p.m1, 0.0);
    EXPECT_GE(p.m2, 0.0);
    const auto q = port_means(s, r, d + kPi, v);
    EXPECT_NEAR(q.m1, p.m2, 1e-12);
    EXPECT_NEAR(q.m2, p.m1, 1e-12);
  }
}

TEST(PortMeans, VisibilityOutOfRangeThrows) {
  EXPECT_THROW(port_means(1.0, 1.0, 0.0, 1.5), std::domain_error);
  EXPECT_THROW(port_means(1.0, 1.0, 0.0, -0.1), std::domain_error);
}

TEST(WrapPhase, HalfOpen) {
  EXPECT_EQ(wrap_phase(0.0), 0.0);
  EXPECT_EQ(wrap_phase(2.0 * kPi), 0.0);
  EXPECT_NEAR(wrap_phase(-kPi / 2.0), 3.0 * kPi / 2.0, 1e-15);
  EXPECT_LT(wrap_phase(std::nextafter(2.0 * kPi, 0.0)), 2.0 * kPi);
  EXPECT_GE(wrap_phase(-1e-300), 0.0);
  EXPECT_LT(wrap_phase(-1e-300), 2.0 * kPi);
}

TEST(PerturbPhase, Examples) {
  Rng rng(2);
  EXPECT_DOUBLE_EQ(perturb_phase(kPi, 0.0, {}, rng), kPi);
  EXPECT_NEAR(perturb_phase(3.0 * kPi / 2.0, 0.0, {kPi}, rng), kPi / 2.0, 1e-15);
}

TEST(PerturbPhase, SampleStdMatchesSigma) {
  Rng rng(4);
  constexpr int kN = 200000;
  constexpr double kSigma = 0.05;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < kN; ++i) {
    const double d = perturb_phase(kPi, kSigma, {}, rng) - kPi;
    sum += d;
    sum2 += d * d;
  }
  const double mean = sum / kN;
  const double sd = std::sqrt(sum2 / kN - mean * mean);
  EXPECT_NEAR(mean, 0.0, 3.0 * kSigma / std::sqrt(kN));
  // Standard error of a sample std is sigma / sqrt(2 N).
  EXPECT_NEAR(sd, kSigma, 4.0 * kSigma / std::sqrt(2.0 * kN));
}

}  // namespace
}  // namespace qkdsim
