#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "tdpt/grid.hpp"
#include "tdpt/propagator.hpp"

namespace tdpt {

enum class OrderClass { Stationary, Oscillatory };

/// Stationary iff k >= 2m, oscillatory iff 2m > k. Requires 1 <= m <= k.
OrderClass classify(std::size_t m, std::size_t k);
std::string_view to_string(OrderClass c) noexcept;

/// Hermitian matrix of overlaps <Psi_j|Psi_h> between order components.
class OverlapMatrix {
 public:
  explicit OverlapMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  std::size_t dim() const noexcept { return dim_; }
  Complex& operator()(std::size_t j, std::size_t h) { return data_[j * dim_ + h]; }
  const Complex& operator()(std::size_t j, std::size_t h) const { return data_[j * dim_ + h]; }

 private:
  std::size_t dim_;
  ComplexVector data_;
};

OverlapMatrix overlap_matrix(const PerturbativeState& ps);

struct NormOrderEntry {
  std::size_t m;
  double value;
  OrderClass cls;
  double magnitude = 0.0;  ///< sum of |overlap| over the terms that cancel into value
};

struct NormOrderReport {
  std::size_t step = 0;
  double time = 0.0;
  double total_norm = 0.0;
  std::vector<NormOrderEntry> entries;  ///< m = 1..k

  double stationary_sum() const noexcept;
  double oscillatory_sum() const noexcept;
};

inline constexpr double kImaginaryResidueTolerance = 1e-12;

/// Norm orders N_{2m} = sum_j M(j, 2m - j). total_norm is the squared norm of the
/// reconstructed state. Throws NumericalConsistencyError if an order has an imaginary
/// part above 1e-12 relative to max(1, sum of contributing |M|).
NormOrderReport norm_orders(const PerturbativeState& ps);

/// True iff all runs have the same report times and every entry of the given class
/// agrees across runs within tol * max(1, magnitude). For entries built from overlaps
/// no larger than one this is an absolute tolerance; in divergent runs the bound grows
/// with the rounding left over from cancelling large overlaps.
bool entries_agree(const std::vector<std::vector<NormOrderReport>>& runs, OrderClass cls,
                   double tol);

/// First time where total_norm - (1 + stationary_sum) exceeds threshold.
std::optional<double> divergence_onset(const std::vector<NormOrderReport>& reports,
                                       double threshold = 0.1);

}  // namespace tdpt
