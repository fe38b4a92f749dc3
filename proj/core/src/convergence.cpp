#include "tdpt/convergence.hpp"

#include <cmath>
#include <string>

#include "tdpt/errors.hpp"

namespace tdpt {

double ConvergenceReport::step_independent_share(std::size_t i) const {
  const double phi = std::abs(step_independent.at(i));
  const double lin = std::abs(dt_coarse * linear_coefficient.at(i));
  const double total = phi + lin;
  return total > 0.0 ? phi / total : 0.0;
}

ConvergenceReport convergence_split(const NormSeries& coarse, const NormSeries& fine) {
  if (coarse.times.size() != coarse.deviations.size() ||
      fine.times.size() != fine.deviations.size()) {
    throw UsageError("norm series has mismatched time and deviation lengths");
  }
  if (!(coarse.dt > 0.0) || std::abs(coarse.dt - 2.0 * fine.dt) > 1e-12 * coarse.dt) {
    throw UsageError("convergence split needs the second run at exactly half the time step");
  }
  ConvergenceReport report;
  report.dt_coarse = coarse.dt;
  const double tol = 1e-9 * fine.dt;
  std::size_t j = 0;
  for (std::size_t i = 0; i < coarse.times.size(); ++i) {
    const double t = coarse.times[i];
    while (j < fine.times.size() && fine.times[j] < t - tol) ++j;
    if (j == fine.times.size() || std::abs(fine.times[j] - t) > tol) {
      throw UsageError("time grids do not match: coarse time " + std::to_string(t) +
                       " has no counterpart in the fine run");
    }
    const double e_coarse = coarse.deviations[i];
    const double e_fine = fine.deviations[j];
    report.times.push_back(t);
    report.step_independent.push_back(2.0 * e_fine - e_coarse);
    report.linear_coefficient.push_back((e_coarse - e_fine) / fine.dt);
  }
  return report;
}

}  // namespace tdpt
