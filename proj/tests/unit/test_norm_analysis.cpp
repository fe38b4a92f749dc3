#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "tdpt/errors.hpp"
#include "tdpt/norm_analysis.hpp"
#include "tdpt/propagator.hpp"

namespace tdpt {
namespace {

struct Fixture {
  SpatialGrid grid = make_grid(-15.0, 15.0, 64);
  SystemHamiltonian h = SystemHamiltonian::linear(grid, 1.0, {0.05, 0.0, 0.3});
  LaserPulse pulse = LaserPulse::unchirped(0.08, LaserPulse::beta_from_fwhm(6.0), 4.0, 0.3);
  TwoComponentWaveFunction psi = gaussian_packet(grid, 0.0, 2.0, 0.2, ElectronicState::Excited);
};

TEST(Classify, StationaryAndOscillatoryWindows) {
  EXPECT_EQ(classify(1, 2), OrderClass::Stationary);
  EXPECT_EQ(classify(2, 2), OrderClass::Oscillatory);
  EXPECT_EQ(classify(1, 1), OrderClass::Oscillatory);
  for (std::size_t k = 1; k <= 14; ++k) {
    for (std::size_t m = 1; m <= k; ++m) {
      EXPECT_EQ(classify(m, k) == OrderClass::Stationary, 2 * m <= k);
    }
  }
  EXPECT_THROW(classify(0, 3), DomainError);
  EXPECT_THROW(classify(4, 3), DomainError);
  EXPECT_EQ(to_string(OrderClass::Stationary), "stationary");
}

TEST(OverlapMatrix, InitialStateIsUnitProjector) {
  Fixture f;
  const auto m = overlap_matrix(PerturbativeState(f.psi, 4, 0.3));
  for (std::size_t j = 0; j < 5; ++j) {
    for (std::size_t h = 0; h < 5; ++h) {
      if (j == 0 && h == 0) {
        EXPECT_NEAR(m(j, h).real(), 1.0, 1e-14);
      } else {
        EXPECT_EQ(m(j, h), Complex{});
      }
    }
  }
}

TEST(OverlapMatrix, ParityZerosAndHermiticity) {
  Fixture f;
  PerturbativeState ps(f.psi, 5, 0.3);
  const SimpleAlgorithm alg(f.h, CouplingOperator(1.0, f.pulse), 0.3);
  for (int s = 0; s < 30; ++s) alg.advance(ps);
  const auto m = overlap_matrix(ps);
  for (std::size_t j = 0; j <= 5; ++j) {
    for (std::size_t h = 0; h <= 5; ++h) {
      if ((j + h) % 2 == 1) EXPECT_LT(std::abs(m(j, h)), 1e-14);
      EXPECT_LT(std::abs(m(j, h) - std::conj(m(h, j))), 1e-13);
    }
  }
}

TEST(NormOrders, ReconstructsTotalNorm) {
  Fixture f;
  for (std::size_t k : {1u, 2u, 5u, 8u}) {
    PerturbativeState ps(f.psi, k, 0.3);
    const SimpleAlgorithm alg(f.h, CouplingOperator(1.0, f.pulse), 0.3);
    for (int s = 0; s < 40; ++s) {
      alg.advance(ps);
      const auto rep = norm_orders(ps);
      ASSERT_EQ(rep.entries.size(), k);
      double sum = 1.0;
      for (const auto& e : rep.entries) sum += e.value;
      EXPECT_NEAR(rep.total_norm, sum, 1e-12);
      EXPECT_NEAR(rep.total_norm, ps.reconstructed().norm(), 1e-12);
      EXPECT_EQ(rep.step, ps.step_index());
      EXPECT_NEAR(rep.stationary_sum() + rep.oscillatory_sum(), sum - 1.0, 1e-14);
      for (const auto& e : rep.entries) EXPECT_EQ(e.cls, classify(e.m, k));
    }
  }
}

TEST(NormOrders, LeadingStationaryOrderIsSumOfSquaredCouplings) {
  Fixture f;
  const CouplingOperator w(1.7, f.pulse);
  const double dt = 0.3;
  PerturbativeState ps(f.psi, 4, dt);
  const SimpleAlgorithm alg(f.h, w, dt);
  double sum = 0.0;
  for (int n = 1; n <= 60; ++n) {
    alg.advance(ps);
    const double e = 1.7 * field_at(f.pulse, n * dt);
    sum += e * e;
    EXPECT_NEAR(norm_orders(ps).entries[0].value, -dt * dt * sum, 1e-12);
  }
}

TEST(NormOrders, NonFiniteFieldTripsConsistencyGuard) {
  Fixture f;
  const CouplingOperator bad(1.0, [](double t) {
    return t > 1.0 ? std::numeric_limits<double>::quiet_NaN() : 0.01;
  });
  PerturbativeState ps(f.psi, 2, 0.5);
  const SimpleAlgorithm alg(f.h, bad, 0.5);
  alg.advance(ps);
  EXPECT_NO_THROW(norm_orders(ps));
  alg.advance(ps);
  alg.advance(ps);
  EXPECT_THROW(norm_orders(ps), NumericalConsistencyError);
}

NormOrderReport make_report(std::size_t step, double total, std::vector<NormOrderEntry> e) {
  NormOrderReport r;
  r.step = step;
  r.time = double(step);
  r.total_norm = total;
  r.entries = std::move(e);
  return r;
}

TEST(EntriesAgree, ComparesOnlyRequestedClass) {
  using E = NormOrderEntry;
  const std::vector<NormOrderReport> a = {make_report(0, 1.0, {E{1, -0.1, OrderClass::Stationary}, E{2, 0.3, OrderClass::Oscillatory}})};
  const std::vector<NormOrderReport> b = {make_report(0, 1.0, {E{1, -0.1 + 5e-12, OrderClass::Stationary}, E{2, 0.2, OrderClass::Oscillatory}})};
  EXPECT_TRUE(entries_agree({a, b}, OrderClass::Stationary, 1e-11));
  EXPECT_FALSE(entries_agree({a, b}, OrderClass::Oscillatory, 1e-11));
  EXPECT_FALSE(entries_agree({a, b}, OrderClass::Stationary, 1e-12));
  EXPECT_TRUE(entries_agree({a}, OrderClass::Oscillatory, 0.0));
  const std::vector<NormOrderReport> c = {make_report(1, 1.0, a[0].entries)};
  EXPECT_FALSE(entries_agree({a, c}, OrderClass::Stationary, 1.0));
}

TEST(EntriesAgree, ToleranceScalesWithCancelledMagnitude) {
  using E = NormOrderEntry;
  const std::vector<NormOrderReport> small = {make_report(0, 1.0, {E{1, 0.5, OrderClass::Stationary, 0.8}})};
  const std::vector<NormOrderReport> small2 = {make_report(0, 1.0, {E{1, 0.5 + 5e-11, OrderClass::Stationary, 0.8}})};
  EXPECT_FALSE(entries_agree({small, small2}, OrderClass::Stationary, 1e-11));
  const std::vector<NormOrderReport> big = {make_report(0, 1.0, {E{1, 0.5, OrderClass::Stationary, 1e5}})};
  const std::vector<NormOrderReport> big2 = {make_report(0, 1.0, {E{1, 0.5 + 5e-7, OrderClass::Stationary, 1e5}})};
  EXPECT_TRUE(entries_agree({big, big2}, OrderClass::Stationary, 1e-11));
  const std::vector<NormOrderReport> big3 = {make_report(0, 1.0, {E{1, 0.5 + 2e-6, OrderClass::Stationary, 1e5}})};
  EXPECT_FALSE(entries_agree({big, big3}, OrderClass::Stationary, 1e-11));
}

TEST(DivergenceOnset, FirstExcessAboveThreshold) {
  using E = NormOrderEntry;
  std::vector<NormOrderReport> r;
  r.push_back(make_report(0, 1.0, {E{1, 0.0, OrderClass::Stationary}}));
  r.push_back(make_report(1, 0.95, {E{1, -0.05, OrderClass::Stationary}}));
  r.push_back(make_report(2, 1.04, {E{1, -0.07, OrderClass::Stationary}}));
  r.push_back(make_report(3, 1.2, {E{1, -0.07, OrderClass::Stationary}}));
  ASSERT_TRUE(divergence_onset(r).has_value());
  EXPECT_EQ(*divergence_onset(r), 2.0);
  EXPECT_EQ(*divergence_onset(r, 0.2), 3.0);
  EXPECT_FALSE(divergence_onset(r, 1.0).has_value());
}

}  // namespace
}  // namespace tdpt
