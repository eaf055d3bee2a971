// Copyright 2026 The qkdsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <limits>

#include "oracles.hpp"
#include "qkdsim/analysis.hpp"

namespace qkdsim {
namespace {

TEST(QberTheoryPc, Examples) {
  EXPECT_EQ(qber_theory_pc(0.1, 0.1, 1.0, 0.0), 0.0);
  EXPECT_EQ(qber_theory_pc(0.0, 0.1, 0.9, 1e-4), 0.5);
  EXPECT_NEAR(qber_theory_pc(0.1, 0.1, 0.98, 1e-4), 0.019514259090361002, 1e-12);
}

TEST(QberTheoryPc, MatchesEnumeration) {
  for (double mu : {0.0, 0.05, 0.1, 0.2, 1.0, 5.0}) {
    for (double eta : {0.05, 0.1, 0.8}) {
      for (double v : {0.0, 0.5, 0.9, 0.98, 1.0}) {
        for (double pd : {0.0, 1e-4, 1e-3, 0.1}) {
          EXPECT_NEAR(qber_theory_pc(mu, eta, v, pd), oracle::pc_qber_enumerated(mu, eta, v, pd),
                      1e-12)
              << mu << ' ' << eta << ' ' << v << ' ' << pd;
        }
      }
    }
  }
}

TEST(QberTheoryPc, RangeAndLimits) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> mu(0.0, 10.0), u(0.0, 1.0);
  for (int i = 0; i < 20000; ++i) {
    const double q = qber_theory_pc(mu(rng), u(rng), u(rng), u(rng) * 0.1);
    EXPECT_GE(q, 0.0);
    EXPECT_LE(q, 0.5 + 1e-15);
  }
  // Weak-pulse, dark-free limit: QBER -> (1 - V) / 2.
  for (double v : {0.5, 0.9, 0.98}) {
    EXPECT_LT(std::abs(qber_theory_pc(1e-5, 0.1, v, 0.0) - (1.0 - v) / 2.0), 1e-4);
  }
  for (double pd : {1e-6, 1e-3, 0.3}) EXPECT_EQ(qber_theory_pc(0.0, 0.1, 0.9, pd), 0.5);
}

TEST(QberTheoryPc, DomainErrors) {
  EXPECT_THROW(qber_theory_pc(-0.1, 0.1, 0.9, 0.0), std::domain_error);
  EXPECT_THROW(qber_theory_pc(0.1, 1.1, 0.9, 0.0), std::domain_error);
  EXPECT_THROW(qber_theory_pc(0.1, 0.1, 1.1, 0.0), std::domain_error);
  EXPECT_THROW(qber_theory_pc(0.1, 0.1, 0.9, -1e-3), std::domain_error);
}

TEST(QberTheoryHomodyne, ReducesToQAtZeroThreshold) {
  EXPECT_NEAR(qber_theory_homodyne(2.0, 0.0), oracle::gaussian_tail(2.0), 1e-12);
  // A dead zone always lowers the conditional error rate.
  EXPECT_LT(qber_theory_homodyne(2.0, 0.5), qber_theory_homodyne(2.0, 0.0));
  EXPECT_NEAR(qber_theory_homodyne(0.0, 1.0), 0.5, 1e-15);
}

TEST(TwoSidedZ, KnownQuantiles) {
  EXPECT_NEAR(two_sided_z(0.95), 1.959963984540054, 1e-12);
  EXPECT_NEAR(two_sided_z(0.997), 2.967737925342, 1e-9);
  EXPECT_THROW(two_sided_z(1.0), std::domain_error);
}

TEST(WilsonInterval, Examples) {
  const Interval zero = wilson_interval(0, 100, 0.95);
  EXPECT_EQ(zero.low, 0.0);
  EXPECT_NEAR(zero.high, 0.03699349820698569, 1e-12);

  const Interval half = wilson_interval(50, 100, 0.95);
  EXPECT_NEAR(half.low, 0.4038315303659956, 1e-12);
  EXPECT_NEAR(half.low + half.high, 1.0, 1e-12);

  const Interval q2 = wilson_interval(228, 10000, 0.95);
  EXPECT_NEAR(q2.low, 0.020052523375582592, 1e-12);
  EXPECT_NEAR(q2.high, 0.025913964669391148, 1e-12);
  EXPECT_LT(q2.low, 0.022750131948179198);
  EXPECT_GT(q2.high, 0.022750131948179198);

  const Interval all = wilson_interval(10, 10, 0.95);
  EXPECT_EQ(all.high, 1.0);
}

TEST(WilsonInterval, DomainErrors) {
  EXPECT_THROW(wilson_interval(1, 0, 0.95), std::domain_error);
  EXPECT_THROW(wilson_interval(11, 10, 0.95), std::domain_error);
  EXPECT_THROW(wilson_interval(1, 10, 0.0), std::domain_error);
  EXPECT_THROW(wilson_interval(1, 10, 1.0), std::domain_error);
}

TEST(WilsonInterval, CoverageNearNominal) {
  constexpr double kP = 0.022750131948179198;
  constexpr std::uint64_t kTrials = 10000;
  constexpr int kDraws = 10000;
  std::mt19937_64 rng(2024);
  std::binomial_distribution<std::uint64_t> binom(kTrials, kP);
  int covered = 0;
  for (int i = 0; i < kDraws; ++i) {
    const Interval ci = wilson_interval(binom(rng), kTrials, 0.95);
    covered += ci.low <= kP && kP <= ci.high;
  }
  const double coverage = covered / double(kDraws);
  EXPECT_GE(coverage, 0.94);
  EXPECT_LE(coverage, 0.96);
}

TEST(Compare, Examples) {
  EXPECT_EQ(compare(0.25, 25, 100), 0.0);
  EXPECT_EQ(compare(0.5, 500, 1000), 0.0);
  EXPECT_NEAR(compare(0.02275, 228, 10000), 0.033533313125607006, 1e-9);
}

TEST(Compare, DegeneratePredictions) {
  EXPECT_EQ(compare(0.0, 0, 100), 0.0);
  EXPECT_EQ(compare(1.0, 100, 100), 0.0);
  EXPECT_EQ(compare(0.0, 1, 100), std::numeric_limits<double>::infinity());
  EXPECT_EQ(compare(1.0, 99, 100), -std::numeric_limits<double>::infinity());
  EXPECT_THROW(compare(0.5, 0, 0), std::domain_error);
}

TEST(Compare, AntisymmetricInDeviation) {
  EXPECT_NEAR(compare(0.5, 520, 1000), -compare(0.5, 480, 1000), 1e-12);
  EXPECT_NEAR(compare(0.1, 130, 1000) + compare(0.1, 70, 1000), 0.0, 1e-12);
}

TEST(PredictedQber, PicksReceiverFormula) {
  RunConfig c;
  c.receiver = Receiver::Homodyne;
  c.mean_photons_per_bit = 1.0;
  c.homodyne.quantum_efficiency = 1.0;
  EXPECT_NEAR(predicted_qber(c), ber_theory(1.0, 1.0, 0.0), 1e-15);

  c.receiver = Receiver::PhotonCounting;
  c.visibility.intrinsic_visibility = 0.9;
  c.apd.dark_prob_per_gate = 1e-3;
  EXPECT_NEAR(predicted_qber(c), qber_theory_pc(1.0, 0.1, 0.9, 1e-3), 1e-15);
}

TEST(MakeTheoryPoint, FillsIntervalAroundObservation) {
  RunStats s;
  s.sifted = 10000;
  s.errors = 228;
  const TheoryPoint tp = make_theory_point(1.0, 0.02275, s);
  EXPECT_DOUBLE_EQ(tp.observed, 0.0228);
  EXPECT_LE(tp.ci_low, tp.observed);
  EXPECT_GE(tp.ci_high, tp.observed);
  EXPECT_NEAR(tp.z_score, compare(0.02275, 228, 10000), 1e-15);
}

}  // namespace
}  // namespace qkdsim
