#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "tdpt/errors.hpp"
#include "tdpt/fourier.hpp"
#include "tdpt/grid.hpp"
#include "test_support.hpp"

namespace tdpt {
namespace {

TEST(SpatialGrid, SpacingFollowsPeriodicConvention) {
  const auto g = make_grid(0.0, 10.0, 256);
  EXPECT_DOUBLE_EQ(g.dr(), 0.0390625);
  EXPECT_DOUBLE_EQ(g.position(0), 0.0);
  EXPECT_DOUBLE_EQ(g.position(255), 10.0 - 0.0390625);
}

TEST(SpatialGrid, MomentumLayoutIsFftOrder) {
  const auto g = make_grid(-5.0, 5.0, 16);
  const auto k = g.momentum_values();
  ASSERT_EQ(k.size(), 16u);
  EXPECT_EQ(k[0], 0.0);
  const double dk = 2.0 * std::numbers::pi / (16 * g.dr());
  EXPECT_NEAR(k[1], dk, 1e-15);
  EXPECT_NEAR(k[7], 7 * dk, 1e-14);
  EXPECT_NEAR(k[8], -8 * dk, 1e-14);
  EXPECT_NEAR(k[15], -dk, 1e-15);
}

TEST(SpatialGrid, RejectsInvalidParameters) {
  EXPECT_THROW(make_grid(0.0, 10.0, 100), ConfigError);
  EXPECT_THROW(make_grid(0.0, 10.0, 8), ConfigError);
  EXPECT_THROW(make_grid(1.0, 1.0, 16), ConfigError);
  EXPECT_THROW(make_grid(2.0, 1.0, 16), ConfigError);
}

TEST(GaussianPacket, NormalizedOnRequestedComponent) {
  const auto g = make_grid(-20.0, 20.0, 512);
  for (double center : {-3.0, 0.0, 4.5}) {
    for (double p : {0.0, 1.3}) {
      const auto psi = gaussian_packet(g, center, 1.7, p, ElectronicState::Excited);
      EXPECT_NEAR(psi.norm(), 1.0, 1e-12);
      EXPECT_EQ(psi.component_norm(ElectronicState::Ground), 0.0);
      for (const auto& z : psi.psi0()) EXPECT_EQ(z, Complex{});
    }
  }
  const auto ground = gaussian_packet(g, 0.0, 1.0, 0.0, ElectronicState::Ground);
  EXPECT_EQ(ground.component_norm(ElectronicState::Excited), 0.0);
  EXPECT_NEAR(ground.norm(), 1.0, 1e-12);
}

TEST(GaussianPacket, SymmetricAboutMidGrid) {
  const auto g = make_grid(-10.0, 10.0, 256);
  const auto psi = gaussian_packet(g, 0.0, 1.1, 0.0, ElectronicState::Excited);
  const std::size_t c = 128;
  ASSERT_DOUBLE_EQ(g.position(c), 0.0);
  for (std::size_t j = 1; j < 128; ++j) {
    EXPECT_NEAR(std::abs(psi.psi1()[c + j]), std::abs(psi.psi1()[c - j]), 1e-12);
  }
}

TEST(GaussianPacket, WidthStandardDeviationMatchesDensity) {
  const auto g = make_grid(-20.0, 20.0, 1024);
  const auto psi = gaussian_packet(g, 1.0, 1.5, 0.0, ElectronicState::Excited);
  double mean = 0.0, var = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) mean += g.position(i) * std::norm(psi.psi1()[i]) * g.dr();
  for (std::size_t i = 0; i < g.size(); ++i) {
    var += std::pow(g.position(i) - mean, 2) * std::norm(psi.psi1()[i]) * g.dr();
  }
  EXPECT_NEAR(mean, 1.0, 1e-12);
  EXPECT_NEAR(std::sqrt(var), 1.5, 1e-12);
}

TEST(GaussianPacket, Errors) {
  const auto g = make_grid(-10.0, 10.0, 64);  // dr = 0.3125
  EXPECT_THROW(gaussian_packet(g, 0.0, 1.0, 0.0, ElectronicState::Excited), ResolutionError);
  EXPECT_NO_THROW(gaussian_packet(g, 0.0, 1.25, 0.0, ElectronicState::Excited));
  EXPECT_THROW(gaussian_packet(g, 0.0, -1.0, 0.0, ElectronicState::Excited), ConfigError);
  EXPECT_THROW(gaussian_packet(g, 6.0, 1.25, 0.0, ElectronicState::Excited), ConfigError);
  EXPECT_NO_THROW(gaussian_packet(g, 5.0, 1.25, 0.0, ElectronicState::Excited));
}

TEST(InnerProduct, BasicProperties) {
  const auto g = make_grid(-10.0, 10.0, 64);
  std::mt19937_64 rng(7);
  const auto a = testing::random_state(g, rng);
  const auto b = testing::random_state(g, rng);
  const Complex aa = inner_product(a, a);
  EXPECT_GE(aa.real(), 0.0);
  EXPECT_EQ(aa.imag(), 0.0);
  EXPECT_NEAR(aa.real(), a.norm(), 1e-12 * a.norm());
  const Complex ab = inner_product(a, b);
  const Complex ba = inner_product(b, a);
  EXPECT_NEAR(std::abs(ab - std::conj(ba)), 0.0, 1e-14 * std::abs(ab));
}

TEST(InnerProduct, DifferentElectronicStatesAreOrthogonal) {
  const auto g = make_grid(-10.0, 10.0, 128);
  const auto a = gaussian_packet(g, 0.0, 1.0, 0.5, ElectronicState::Excited);
  const auto b = gaussian_packet(g, 0.5, 1.2, -0.3, ElectronicState::Ground);
  EXPECT_EQ(inner_product(a, b), Complex{});
}

TEST(InnerProduct, SesquilinearOnRandomVectors) {
  const auto g = make_grid(-10.0, 10.0, 64);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = testing::random_state(g, rng);
    const auto b = testing::random_state(g, rng);
    const auto c = testing::random_state(g, rng);
    const Complex alpha(u(rng), u(rng)), beta(u(rng), u(rng));
    const auto lin = alpha * b + beta * c;
    const Complex lhs = inner_product(a, lin);
    const Complex rhs = alpha * inner_product(a, b) + beta * inner_product(a, c);
    EXPECT_LE(std::abs(lhs - rhs), 1e-12 * (1.0 + std::abs(lhs)));
    const Complex lhs2 = inner_product(lin, a);
    const Complex rhs2 = std::conj(alpha) * inner_product(b, a) + std::conj(beta) * inner_product(c, a);
    EXPECT_LE(std::abs(lhs2 - rhs2), 1e-12 * (1.0 + std::abs(lhs2)));
  }
}

TEST(InnerProduct, GridMismatchIsUsageError) {
  const TwoComponentWaveFunction a(make_grid(0.0, 1.0, 16));
  const TwoComponentWaveFunction b(make_grid(0.0, 2.0, 16));
  EXPECT_THROW(inner_product(a, b), UsageError);
  EXPECT_THROW((void)(a + b), UsageError);
}

TEST(WaveFunction, AlgebraAndDistance) {
  const auto g = make_grid(-10.0, 10.0, 32);
  std::mt19937_64 rng(3);
  const auto a = testing::random_state(g, rng);
  auto b = a;
  b.axpy(Complex(0.0, 2.0), a);
  const auto expected = Complex(1.0, 2.0) * a;
  EXPECT_LE(max_abs_difference(b, expected), 1e-14 * 10);
  EXPECT_NEAR(distance(a, a), 0.0, 0.0);
  EXPECT_NEAR(distance(a, 2.0 * a), std::sqrt(a.norm()), 1e-13);
  EXPECT_THROW(TwoComponentWaveFunction(g, ComplexVector(3), ComplexVector(32)), UsageError);
}

TEST(FourierTransform, MatchesNaiveDft) {
  const std::size_t n = 16;
  std::mt19937_64 rng(5);
  std::normal_distribution<double> d;
  ComplexVector x(n);
  for (auto& z : x) z = {d(rng), d(rng)};
  ComplexVector naive(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      naive[k] += x[j] * std::polar(1.0, -2.0 * std::numbers::pi * double(j * k) / double(n));
    }
  }
  FourierTransform fft(n);
  ComplexVector y = x;
  fft.forward(y);
  for (std::size_t k = 0; k < n; ++k) EXPECT_LE(std::abs(y[k] - naive[k]), 1e-12);
}

TEST(FourierTransform, ParsevalAndRoundTrip) {
  for (std::size_t n : {16u, 256u, 4096u}) {
    std::mt19937_64 rng(n);
    std::normal_distribution<double> d;
    ComplexVector x(n);
    for (auto& z : x) z = {d(rng), d(rng)};
    ComplexVector y = x;
    FourierTransform fft(n);
    fft.forward(y);
    double nx = 0.0, ny = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      nx += std::norm(x[i]);
      ny += std::norm(y[i]);
    }
    EXPECT_NEAR(ny / double(n), nx, 1e-12 * nx);
    fft.backward(y);
    for (std::size_t i = 0; i < n; ++i) EXPECT_LE(std::abs(y[i] - x[i]), 1e-12);
    EXPECT_THROW(fft.forward(std::span<Complex>(x.data(), n - 1)), UsageError);
  }
}

}  // namespace
}  // namespace tdpt
