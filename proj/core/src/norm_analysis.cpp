#include "tdpt/norm_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tdpt/errors.hpp"

namespace tdpt {

OrderClass classify(std::size_t m, std::size_t k) {
  if (m < 1 || m > k) {
    throw DomainError("norm order m = " + std::to_string(m) + " outside 1..k with k = " +
                      std::to_string(k));
  }
  return k >= 2 * m ? OrderClass::Stationary : OrderClass::Oscillatory;
}

std::string_view to_string(OrderClass c) noexcept {
  return c == OrderClass::Stationary ? "stationary" : "oscillatory";
}

OverlapMatrix overlap_matrix(const PerturbativeState& ps) {
  const std::size_t dim = ps.max_order() + 1;
  OverlapMatrix m(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    m(j, j) = inner_product(ps.order(j), ps.order(j));
    for (std::size_t h = j + 1; h < dim; ++h) {
      m(j, h) = inner_product(ps.order(j), ps.order(h));
      m(h, j) = std::conj(m(j, h));
    }
  }
  return m;
}

double NormOrderReport::stationary_sum() const noexcept {
  double s = 0.0;
  for (const auto& e : entries) {
    if (e.cls == OrderClass::Stationary) s += e.value;
  }
  return s;
}

double NormOrderReport::oscillatory_sum() const noexcept {
  double s = 0.0;
  for (const auto& e : entries) {
    if (e.cls == OrderClass::Oscillatory) s += e.value;
  }
  return s;
}

NormOrderReport norm_orders(const PerturbativeState& ps) {
  const std::size_t k = ps.max_order();
  NormOrderReport report;
  report.step = ps.step_index();
  report.time = ps.time();
  report.total_norm = ps.reconstructed().norm();
  report.entries.reserve(k);

  // Only overlaps with j + h even contribute; odd ones vanish by parity.
  for (std::size_t m = 1; m <= k; ++m) {
    const std::size_t two_m = 2 * m;
    const std::size_t j_lo = two_m > k ? two_m - k : 0;
    const std::size_t j_hi = std::min(two_m, k);
    Complex sum{};
    double magnitude = 0.0;
    for (std::size_t j = j_lo; j <= j_hi; ++j) {
      const Complex z = inner_product(ps.order(j), ps.order(two_m - j));
      sum += z;
      magnitude += std::abs(z);
    }
    if (!(std::abs(sum.imag()) <= kImaginaryResidueTolerance * (1.0 + magnitude))) {
      throw NumericalConsistencyError("norm order " + std::to_string(two_m) +
                                      " has imaginary residue " + std::to_string(sum.imag()));
    }
    report.entries.push_back({m, sum.real(), classify(m, k), magnitude});
  }
  return report;
}

bool entries_agree(const std::vector<std::vector<NormOrderReport>>& runs, OrderClass cls,
                   double tol) {
  if (runs.size() < 2) return true;
  const auto& ref = runs.front();
  for (std::size_t r = 1; r < runs.size(); ++r) {
    const auto& other = runs[r];
    if (other.size() != ref.size()) return false;
    for (std::size_t i = 0; i < ref.size(); ++i) {
      if (ref[i].step != other[i].step || ref[i].entries.size() != other[i].entries.size()) {
        return false;
      }
      for (std::size_t e = 0; e < ref[i].entries.size(); ++e) {
        const auto& a = ref[i].entries[e];
        const auto& b = other[i].entries[e];
        if (a.cls != cls) continue;
        const double scale = std::max({1.0, a.magnitude, b.magnitude});
        if (!(std::abs(a.value - b.value) <= tol * scale)) return false;
      }
    }
  }
  return true;
}

std::optional<double> divergence_onset(const std::vector<NormOrderReport>& reports,
                                       double threshold) {
  for (const auto& r : reports) {
    const double excess = r.total_norm - (1.0 + r.stationary_sum());
    if (!(excess <= threshold)) return r.time;
  }
  return std::nullopt;
}

}  // namespace tdpt
