#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace tdpt {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Uniform periodic grid on [r_min, r_max) with a power-of-two point count.
class SpatialGrid {
 public:
  /// Throws ConfigError unless r_max > r_min and n_points is a power of two >= 16.
  SpatialGrid(double r_min, double r_max, std::size_t n_points);

  double r_min() const noexcept { return r_min_; }
  double r_max() const noexcept { return r_max_; }
  std::size_t size() const noexcept { return n_points_; }
  double dr() const noexcept { return dr_; }
  double position(std::size_t i) const noexcept { return r_min_ + static_cast<double>(i) * dr_; }
  std::vector<double> positions() const;

  /// Wavenumbers in FFT order: 0, 1, ..., N/2-1, -N/2, ..., -1 times 2 pi / (N dr).
  std::span<const double> momentum_values() const noexcept { return *momenta_; }

  bool operator==(const SpatialGrid& other) const noexcept {
    return r_min_ == other.r_min_ && r_max_ == other.r_max_ && n_points_ == other.n_points_;
  }

 private:
  double r_min_;
  double r_max_;
  std::size_t n_points_;
  double dr_;
  std::shared_ptr<const std::vector<double>> momenta_;
};

SpatialGrid make_grid(double r_min, double r_max, std::size_t n_points);

enum class ElectronicState { Ground = 0, Excited = 1 };

/// Amplitudes of the excited (|1>) and ground (|0>) electronic states on a grid.
class TwoComponentWaveFunction {
 public:
  explicit TwoComponentWaveFunction(SpatialGrid grid);
  TwoComponentWaveFunction(SpatialGrid grid, ComplexVector psi1, ComplexVector psi0);

  const SpatialGrid& grid() const noexcept { return grid_; }

  std::span<Complex> psi1() noexcept { return psi1_; }
  std::span<Complex> psi0() noexcept { return psi0_; }
  std::span<const Complex> psi1() const noexcept { return psi1_; }
  std::span<const Complex> psi0() const noexcept { return psi0_; }
  std::span<Complex> component(ElectronicState s) noexcept;
  std::span<const Complex> component(ElectronicState s) const noexcept;

  /// Squared L2 norm with Riemann weight dr, summed over both components.
  double norm() const noexcept;
  double component_norm(ElectronicState s) const noexcept;

  void set_zero() noexcept;
  /// this += a * x
  void axpy(Complex a, const TwoComponentWaveFunction& x);
  TwoComponentWaveFunction& operator+=(const TwoComponentWaveFunction& x);
  TwoComponentWaveFunction& operator-=(const TwoComponentWaveFunction& x);
  TwoComponentWaveFunction& operator*=(Complex a) noexcept;

 private:
  void require_same_grid(const TwoComponentWaveFunction& x) const;

  SpatialGrid grid_;
  ComplexVector psi1_;
  ComplexVector psi0_;
};

TwoComponentWaveFunction operator+(TwoComponentWaveFunction a, const TwoComponentWaveFunction& b);
TwoComponentWaveFunction operator-(TwoComponentWaveFunction a, const TwoComponentWaveFunction& b);
TwoComponentWaveFunction operator*(Complex a, TwoComponentWaveFunction x);

/// <a|b>, antilinear in a. Throws UsageError on grid mismatch.
Complex inner_product(const TwoComponentWaveFunction& a, const TwoComponentWaveFunction& b);

/// sqrt(norm(a - b)).
double distance(const TwoComponentWaveFunction& a, const TwoComponentWaveFunction& b);

/// Largest pointwise |a - b| over both components.
double max_abs_difference(const TwoComponentWaveFunction& a, const TwoComponentWaveFunction& b);

/// Normalized Gaussian exp(-(r-center)^2/(4 width^2) + i momentum r) on one component.
/// width is the standard deviation of |psi|^2. Throws ResolutionError below 4 points per width
/// and ConfigError when center +- 4 width leaves the grid.
TwoComponentWaveFunction gaussian_packet(const SpatialGrid& grid, double center, double width,
                                         double momentum, ElectronicState which);

}  // namespace tdpt
