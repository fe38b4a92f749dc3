#include "tdpt/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tdpt/errors.hpp"

namespace tdpt {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::shared_ptr<const std::vector<double>> make_momenta(std::size_t n, double dr) {
  auto k = std::make_shared<std::vector<double>>(n);
  const double scale = 2.0 * std::numbers::pi / (static_cast<double>(n) * dr);
  const auto half = static_cast<std::ptrdiff_t>(n / 2);
  for (std::size_t i = 0; i < n; ++i) {
    auto idx = static_cast<std::ptrdiff_t>(i);
    if (idx >= half) idx -= static_cast<std::ptrdiff_t>(n);
    (*k)[i] = scale * static_cast<double>(idx);
  }
  return k;
}

}  // namespace

SpatialGrid::SpatialGrid(double r_min, double r_max, std::size_t n_points)
    : r_min_(r_min), r_max_(r_max), n_points_(n_points), dr_(0.0) {
  if (!std::isfinite(r_min) || !std::isfinite(r_max) || !(r_max > r_min)) {
    throw ConfigError("grid interval must satisfy r_max > r_min");
  }
  if (n_points < 16 || !is_power_of_two(n_points)) {
    throw ConfigError("grid point count must be a power of two >= 16, got " +
                      std::to_string(n_points));
  }
  dr_ = (r_max - r_min) / static_cast<double>(n_points);
  momenta_ = make_momenta(n_points, dr_);
}

std::vector<double> SpatialGrid::positions() const {
  std::vector<double> r(n_points_);
  for (std::size_t i = 0; i < n_points_; ++i) r[i] = position(i);
  return r;
}

SpatialGrid make_grid(double r_min, double r_max, std::size_t n_points) {
  return SpatialGrid(r_min, r_max, n_points);
}

TwoComponentWaveFunction::TwoComponentWaveFunction(SpatialGrid grid)
    : grid_(std::move(grid)), psi1_(grid_.size()), psi0_(grid_.size()) {}

TwoComponentWaveFunction::TwoComponentWaveFunction(SpatialGrid grid, ComplexVector psi1,
                                                   ComplexVector psi0)
    : grid_(std::move(grid)), psi1_(std::move(psi1)), psi0_(std::move(psi0)) {
  if (psi1_.size() != grid_.size() || psi0_.size() != grid_.size()) {
    throw UsageError("wave function component length does not match the grid");
  }
}

std::span<Complex> TwoComponentWaveFunction::component(ElectronicState s) noexcept {
  return s == ElectronicState::Excited ? std::span<Complex>(psi1_) : std::span<Complex>(psi0_);
}

std::span<const Complex> TwoComponentWaveFunction::component(ElectronicState s) const noexcept {
  return s == ElectronicState::Excited ? std::span<const Complex>(psi1_)
                                       : std::span<const Complex>(psi0_);
}

double TwoComponentWaveFunction::component_norm(ElectronicState s) const noexcept {
  double sum = 0.0;
  for (const auto& z : component(s)) sum += std::norm(z);
  return sum * grid_.dr();
}

double TwoComponentWaveFunction::norm() const noexcept {
  return component_norm(ElectronicState::Excited) + component_norm(ElectronicState::Ground);
}

void TwoComponentWaveFunction::set_zero() noexcept {
  std::fill(psi1_.begin(), psi1_.end(), Complex{});
  std::fill(psi0_.begin(), psi0_.end(), Complex{});
}

void TwoComponentWaveFunction::require_same_grid(const TwoComponentWaveFunction& x) const {
  if (!(grid_ == x.grid_)) throw UsageError("wave functions live on different grids");
}

void TwoComponentWaveFunction::axpy(Complex a, const TwoComponentWaveFunction& x) {
  require_same_grid(x);
  for (std::size_t i = 0; i < psi1_.size(); ++i) {
    psi1_[i] += a * x.psi1_[i];
    psi0_[i] += a * x.psi0_[i];
  }
}

TwoComponentWaveFunction& TwoComponentWaveFunction::operator+=(const TwoComponentWaveFunction& x) {
  require_same_grid(x);
  for (std::size_t i = 0; i < psi1_.size(); ++i) {
    psi1_[i] += x.psi1_[i];
    psi0_[i] += x.psi0_[i];
  }
  return *this;
}

TwoComponentWaveFunction& TwoComponentWaveFunction::operator-=(const TwoComponentWaveFunction& x) {
  require_same_grid(x);
  for (std::size_t i = 0; i < psi1_.size(); ++i) {
    psi1_[i] -= x.psi1_[i];
    psi0_[i] -= x.psi0_[i];
  }
  return *this;
}

TwoComponentWaveFunction& TwoComponentWaveFunction::operator*=(Complex a) noexcept {
  for (auto& z : psi1_) z *= a;
  for (auto& z : psi0_) z *= a;
  return *this;
}

TwoComponentWaveFunction operator+(TwoComponentWaveFunction a, const TwoComponentWaveFunction& b) {
  a += b;
  return a;
}

TwoComponentWaveFunction operator-(TwoComponentWaveFunction a, const TwoComponentWaveFunction& b) {
  a -= b;
  return a;
}

TwoComponentWaveFunction operator*(Complex a, TwoComponentWaveFunction x) {
  x *= a;
  return x;
}

Complex inner_product(const TwoComponentWaveFunction& a, const TwoComponentWaveFunction& b) {
  if (!(a.grid() == b.grid())) throw UsageError("inner product of wave functions on different grids");
  Complex sum{};
  const auto a1 = a.psi1(), a0 = a.psi0(), b1 = b.psi1(), b0 = b.psi0();
  for (std::size_t i = 0; i < a1.size(); ++i) {
    sum += std::conj(a1[i]) * b1[i] + std::conj(a0[i]) * b0[i];
  }
  return sum * a.grid().dr();
}

double distance(const TwoComponentWaveFunction& a, const TwoComponentWaveFunction& b) {
  return std::sqrt((a - b).norm());
}

double max_abs_difference(const TwoComponentWaveFunction& a, const TwoComponentWaveFunction& b) {
  if (!(a.grid() == b.grid())) throw UsageError("comparing wave functions on different grids");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.grid().size(); ++i) {
    worst = std::max(worst, std::abs(a.psi1()[i] - b.psi1()[i]));
    worst = std::max(worst, std::abs(a.psi0()[i] - b.psi0()[i]));
  }
  return worst;
}

TwoComponentWaveFunction gaussian_packet(const SpatialGrid& grid, double center, double width,
                                         double momentum, ElectronicState which) {
  if (!(width > 0.0)) throw ConfigError("packet width must be positive");
  if (width / grid.dr() < 4.0) {
    throw ResolutionError("packet width resolved by fewer than 4 grid points");
  }
  if (center - 4.0 * width < grid.r_min() || center + 4.0 * width > grid.r_max()) {
    throw ConfigError("packet support (center +- 4 width) leaves the grid");
  }
  TwoComponentWaveFunction psi(grid);
  auto target = psi.component(which);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid.position(i) - center;
    target[i] = std::exp(Complex(-x * x / (4.0 * width * width), momentum * grid.position(i)));
  }
  psi *= 1.0 / std::sqrt(psi.norm());
  return psi;
}

}  // namespace tdpt
