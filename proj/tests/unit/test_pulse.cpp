#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "tdpt/errors.hpp"
#include "tdpt/pulse.hpp"

namespace tdpt {
namespace {

const double kLn2 = std::numbers::ln2;

TEST(LaserPulse, UnchirpedPeakValue) {
  const auto p = LaserPulse::unchirped(0.0119, LaserPulse::beta_from_fwhm(413.0), 1200.0, 0.1);
  EXPECT_DOUBLE_EQ(field_at(p, 1200.0), 0.0119);
  EXPECT_NEAR(p.tau_prime(), 413.0, 1e-10);
  EXPECT_EQ(p.b2(), 0.0);
  EXPECT_EQ(p.a2(), 0.0);
}

TEST(LaserPulse, ChirpedWithZeroChirpEqualsUnchirped) {
  const double bp = LaserPulse::beta_from_fwhm(413.0);
  for (double e0 : {0.0119, -0.02}) {
    const auto u = LaserPulse::unchirped(e0, bp, 1200.0, 0.1);
    const auto c = LaserPulse::chirped(e0, bp, 1200.0, 0.1, 0.0);
    EXPECT_EQ(c.e0_mod(), std::abs(e0));
    EXPECT_EQ(c.beta(), bp);
    EXPECT_EQ(c.a2(), 0.0);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> t(0.0, 3000.0);
    for (int i = 0; i < 200; ++i) {
      const double s = t(rng);
      EXPECT_NEAR(field_at(c, s), field_at(u, s), 1e-14);
    }
  }
}

TEST(LaserPulse, ChirpRelationsDirectEvaluation) {
  const auto p = LaserPulse::chirped(0.3, 1.0, 0.0, 1.0, 1.0);
  EXPECT_NEAR(p.e0_mod(), std::pow(5.0, -0.25) * 0.3, 1e-15);
  EXPECT_NEAR(p.beta(), 0.2, 1e-15);   // 1/(1 + 4)
  EXPECT_NEAR(p.a2(), 0.8, 1e-15);     // 1/(1/4 + 1)
  EXPECT_NEAR(p.chirped_fwhm(), std::sqrt(4.0 * kLn2 / 0.2), 1e-14);
}

TEST(LaserPulse, ChirpTransformContinuity) {
  const double bp = LaserPulse::beta_from_fwhm(413.0);
  const auto p = LaserPulse::chirped(-0.0119, bp, 0.0, 0.1, 1e-12);
  EXPECT_NEAR(p.e0_mod(), 0.0119, 1e-15);
  EXPECT_NEAR(p.beta(), bp, 1e-15 * bp);
  EXPECT_NEAR(p.a2(), 0.0, 1e-10);
}

TEST(LaserPulse, RejectsNonPositiveWidth) {
  EXPECT_THROW(LaserPulse::unchirped(1.0, 0.0, 0.0, 1.0), ConfigError);
  EXPECT_THROW(LaserPulse::chirped(1.0, -1.0, 0.0, 1.0, 0.1), ConfigError);
  EXPECT_THROW(LaserPulse::beta_from_fwhm(0.0), ConfigError);
}

TEST(PhaseAndEnvelope, PeakAndDecomposition) {
  const double bp = LaserPulse::beta_from_fwhm(200.0);
  for (const auto& p : {LaserPulse::unchirped(0.02, bp, 600.0, 0.12),
                        LaserPulse::chirped(0.02, bp, 600.0, 0.12, 3e3),
                        LaserPulse::chirped(-0.02, bp, 600.0, 0.12, -2e3)}) {
    const auto peak = phase_and_envelope(p, 600.0);
    EXPECT_DOUBLE_EQ(peak.envelope, p.e0_mod());
    if (p.e0_prime() > 0) EXPECT_EQ(peak.phase, 0.0);
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> t(0.0, 1200.0);
    for (int i = 0; i < 200; ++i) {
      const double s = t(rng);
      const auto ep = phase_and_envelope(p, s);
      EXPECT_GE(ep.envelope, 0.0);
      EXPECT_NEAR(ep.envelope * std::cos(ep.phase), field_at(p, s), 1e-14);
    }
  }
}

TEST(PhaseAndEnvelope, HalfWidthConsistency) {
  const double bp = LaserPulse::beta_from_fwhm(413.0);
  for (double b2 : {0.0, 2e4, 5e4}) {
    const auto p = LaserPulse::chirped(0.0119, bp, 2000.0, 0.1, b2);
    const double tau = p.tau_prime();
    const double expected = p.e0_mod() / std::pow(2.0, p.beta() * tau * tau / (4.0 * kLn2));
    for (double sgn : {-1.0, 1.0}) {
      EXPECT_NEAR(phase_and_envelope(p, 2000.0 + sgn * tau / 2).envelope, expected, 1e-15);
    }
  }
  const auto u = LaserPulse::unchirped(0.0119, bp, 2000.0, 0.1);
  EXPECT_NEAR(phase_and_envelope(u, 2000.0 + 413.0 / 2).envelope, 0.0119 / 2, 1e-15);
}

TEST(EnvelopeEnergy, ZeroAtOriginAndMonotone) {
  const auto p = LaserPulse::chirped(0.0119, LaserPulse::beta_from_fwhm(413.0), 1500.0, 0.1, 1e4);
  EXPECT_EQ(envelope_energy(p, 0.0, 1.0), 0.0);
  double prev = 0.0;
  for (double t = 10.0; t < 4000.0; t += 37.3) {
    const double e = envelope_energy(p, t, 3.31);
    EXPECT_GE(e, prev);
    prev = e;
  }
}

TEST(EnvelopeEnergy, GaussianIntegralOracle) {
  const double tau = 413.0;
  const double bp = LaserPulse::beta_from_fwhm(tau);
  for (double b2 : {0.0, 5e4}) {
    const auto p = LaserPulse::chirped(0.0119, bp, 10 * tau, 0.1, b2);
    const double t = p.t_d() + 10 * tau;
    const double exact = p.e0_mod() * p.e0_mod() * std::sqrt(std::numbers::pi / (2.0 * p.beta()));
    EXPECT_NEAR(envelope_energy(p, t), exact, 1e-8 * exact);
    EXPECT_NEAR(envelope_energy(p, t, 3.31), exact, 1e-8 * exact);
  }
}

TEST(EnvelopeEnergy, IndependentOfChirpAtFixedEnergy) {
  const double tau = 413.0;
  const double bp = LaserPulse::beta_from_fwhm(tau);
  const auto a = LaserPulse::chirped(0.0119, bp, 10 * tau, 0.1, 1e4);
  const auto b = LaserPulse::chirped(0.0119, bp, 10 * tau, 0.1, 5e4);
  const double t = 20 * tau;
  EXPECT_NEAR(envelope_energy(a, t), envelope_energy(b, t), 1e-8 * envelope_energy(a, t));
}

TEST(EnvelopeEnergy, PartialLastIntervalIncluded) {
  const auto p = LaserPulse::unchirped(1.0, 1e-12, 0.0, 0.0);  // A = 1 to rounding
  EXPECT_NEAR(envelope_energy(p, 10.5, 1.0), 10.5, 1e-9);
  EXPECT_NEAR(field_energy(p, 10.5, 1.0), 10.5, 1e-9);
}

TEST(FieldEnergy, SlowEnvelopeHalvesSquaredEnvelope) {
  const double tau = 413.0;
  const double bp = LaserPulse::beta_from_fwhm(tau);
  for (double omega : {0.1213, 0.15, 0.2}) {
    ASSERT_GE(omega * tau, 50.0);
    for (double b2 : {0.0, 5e4}) {
      const auto p = LaserPulse::chirped(0.0119, bp, 8 * tau, omega, b2);
      const double t = 16 * tau;
      const double full = field_energy(p, t, 0.5);
      const double half_env = 0.5 * envelope_energy(p, t, 0.5);
      EXPECT_NEAR(full, half_env, 0.02 * half_env) << "omega " << omega << " b2 " << b2;
    }
  }
}

}  // namespace
}  // namespace tdpt
