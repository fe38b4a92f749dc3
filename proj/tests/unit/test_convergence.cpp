#include <gtest/gtest.h>

#include "tdpt/convergence.hpp"
#include "tdpt/errors.hpp"

namespace tdpt {
namespace {

NormSeries synthetic(double dt, std::size_t stride, std::size_t n_reports,
                     double (*phi)(double), double (*chi)(double)) {
  NormSeries s;
  s.dt = dt;
  for (std::size_t i = 0; i < n_reports; ++i) {
    const double t = double(i * stride) * dt;
    s.times.push_back(t);
    s.deviations.push_back(phi(t) + dt * chi(t));
  }
  return s;
}

double phi_fn(double t) { return 1e-3 * t * t; }
double chi_fn(double t) { return -0.02 * t; }
double zero_fn(double) { return 0.0; }

TEST(ConvergenceSplit, RecoversLinearModelExactly) {
  const auto coarse = synthetic(0.2, 5, 40, phi_fn, chi_fn);
  const auto fine = synthetic(0.1, 5, 80, phi_fn, chi_fn);
  const auto rep = convergence_split(coarse, fine);
  ASSERT_EQ(rep.times.size(), 40u);
  for (std::size_t i = 0; i < rep.times.size(); ++i) {
    const double t = rep.times[i];
    EXPECT_NEAR(rep.step_independent[i], phi_fn(t), 1e-13);
    EXPECT_NEAR(rep.linear_coefficient[i], chi_fn(t), 1e-11);
  }
  EXPECT_EQ(rep.dt_coarse, 0.2);
  EXPECT_NEAR(rep.step_independent_share(10), phi_fn(rep.times[10]) /
                                                 (phi_fn(rep.times[10]) + 0.2 * std::abs(chi_fn(rep.times[10]))),
              1e-12);
}

TEST(ConvergenceSplit, ZeroDeviationGivesZeroParts) {
  const auto coarse = synthetic(0.2, 1, 10, zero_fn, zero_fn);
  const auto fine = synthetic(0.1, 1, 20, zero_fn, zero_fn);
  const auto rep = convergence_split(coarse, fine);
  for (std::size_t i = 0; i < rep.times.size(); ++i) {
    EXPECT_EQ(rep.step_independent[i], 0.0);
    EXPECT_EQ(rep.linear_coefficient[i], 0.0);
    EXPECT_EQ(rep.step_independent_share(i), 0.0);
  }
}

TEST(ConvergenceSplit, MismatchedGridsAreUsageErrors) {
  const auto coarse = synthetic(0.2, 5, 10, phi_fn, chi_fn);
  EXPECT_THROW(convergence_split(coarse, synthetic(0.15, 5, 20, phi_fn, chi_fn)), UsageError);
  // Fine run reports at odd multiples only: coarse times are missing.
  auto shifted = synthetic(0.1, 5, 20, phi_fn, chi_fn);
  for (auto& t : shifted.times) t += 0.1;
  EXPECT_THROW(convergence_split(coarse, shifted), UsageError);
  auto broken = synthetic(0.1, 5, 20, phi_fn, chi_fn);
  broken.deviations.pop_back();
  EXPECT_THROW(convergence_split(coarse, broken), UsageError);
}

}  // namespace
}  // namespace tdpt
