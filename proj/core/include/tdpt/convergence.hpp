#pragma once

#include <cstddef>
#include <vector>

namespace tdpt {

/// Norm deviation e(t) = N(t) - 1 sampled at the given times of a run with step dt.
struct NormSeries {
  double dt = 0.0;
  std::vector<double> times;
  std::vector<double> deviations;
};

/// Richardson split e(t; dt) ~ phi(t) + dt chi(t) from runs at dt and dt/2.
struct ConvergenceReport {
  double dt_coarse = 0.0;
  std::vector<double> times;
  std::vector<double> step_independent;    ///< phi ~ 2 e(dt/2) - e(dt)
  std::vector<double> linear_coefficient;  ///< chi ~ (e(dt) - e(dt/2)) / (dt/2)

  /// |phi| / (|phi| + |dt_coarse chi|) at sample i; 0 when both vanish.
  double step_independent_share(std::size_t i) const;
};

/// coarse.dt must equal 2 fine.dt and every coarse time must appear in fine.times.
/// Throws UsageError otherwise.
ConvergenceReport convergence_split(const NormSeries& coarse, const NormSeries& fine);

}  // namespace tdpt
