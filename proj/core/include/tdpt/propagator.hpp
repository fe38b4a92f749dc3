#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "tdpt/fourier.hpp"
#include "tdpt/grid.hpp"
#include "tdpt/pulse.hpp"

namespace tdpt {

inline constexpr std::size_t kMaxPerturbationOrder = 32;

/// V_1(R) = -m0 R + c1 and V_0(R) = m0 R + c0.
struct LinearPotentialPair {
  double m0 = 0.0;
  double c0 = 0.0;
  double c1 = 0.0;

  std::vector<double> potential1(const SpatialGrid& grid) const;
  std::vector<double> potential0(const SpatialGrid& grid) const;
};

/// Field-free nuclear Hamiltonian H0 = T + diag(V1, V0).
class SystemHamiltonian {
 public:
  SystemHamiltonian(SpatialGrid grid, double mass, std::vector<double> potential1,
                    std::vector<double> potential0);
  static SystemHamiltonian linear(SpatialGrid grid, double mass, const LinearPotentialPair& p);
  static SystemHamiltonian free(SpatialGrid grid, double mass);

  const SpatialGrid& grid() const noexcept { return grid_; }
  double mass() const noexcept { return mass_; }
  std::span<const double> potential1() const noexcept { return v1_; }
  std::span<const double> potential0() const noexcept { return v0_; }

 private:
  SpatialGrid grid_;
  double mass_;
  std::vector<double> v1_;
  std::vector<double> v0_;
};

/// Dipole coupling W(t) = -mu E(t) (sigma_x in the electronic basis).
class CouplingOperator {
 public:
  CouplingOperator(double mu, const LaserPulse& pulse);
  CouplingOperator(double mu, std::function<double(double)> field);

  /// Field given by samples E(t_j) = field_samples[j - 1] on t_j = j dt, j >= 1.
  /// Evaluating at any other time throws UsageError.
  static CouplingOperator from_samples(double mu, double dt, std::vector<double> field_samples);
  static CouplingOperator zero();

  double mu() const noexcept { return mu_; }
  double field(double t) const { return field_(t); }
  /// The off-diagonal matrix element -mu E(t).
  double matrix_element(double t) const { return -mu_ * field_(t); }

  /// psi <- W(t) psi: swaps components and scales by -mu E(t).
  void apply(double t, TwoComponentWaveFunction& psi) const;

 private:
  double mu_;
  std::function<double(double)> field_;
};

/// Split-operator propagator U = exp(-i V dt/2) exp(-i T dt) exp(-i V dt/2).
class SplitOperator {
 public:
  SplitOperator(const SystemHamiltonian& h, double dt);
  SplitOperator(const SystemHamiltonian& h, double dt, std::shared_ptr<const FourierTransform> fft);

  double dt() const noexcept { return dt_; }
  void apply(TwoComponentWaveFunction& psi) const;
  void apply_adjoint(TwoComponentWaveFunction& psi) const;

 private:
  void apply_impl(TwoComponentWaveFunction& psi, bool adjoint) const;

  SpatialGrid grid_;
  double dt_;
  std::shared_ptr<const FourierTransform> fft_;
  ComplexVector half_v1_;
  ComplexVector half_v0_;
  ComplexVector kinetic_;
};

TwoComponentWaveFunction split_operator_step(const TwoComponentWaveFunction& state,
                                             const SystemHamiltonian& h, double dt);

/// Order components Psi_m(n), m = 0..k, of the perturbative wave function.
class PerturbativeState {
 public:
  /// orders[0] = initial, higher orders zero. Throws CapacityError for k > 32.
  PerturbativeState(const TwoComponentWaveFunction& initial, std::size_t max_order, double dt);

  std::size_t max_order() const noexcept { return orders_.size() - 1; }
  std::size_t step_index() const noexcept { return step_; }
  double dt() const noexcept { return dt_; }
  double time() const noexcept { return static_cast<double>(step_) * dt_; }
  const SpatialGrid& grid() const noexcept { return orders_.front().grid(); }

  const TwoComponentWaveFunction& order(std::size_t m) const { return orders_.at(m); }
  std::span<const TwoComponentWaveFunction> orders() const noexcept { return orders_; }
  TwoComponentWaveFunction reconstructed() const;

 private:
  friend class SimpleAlgorithm;
  std::vector<TwoComponentWaveFunction> orders_;
  std::size_t step_ = 0;
  double dt_;
};

/// Perturbative propagation, one field sample per step taken at t_{n+1}.
class SimpleAlgorithm {
 public:
  SimpleAlgorithm(const SystemHamiltonian& h, CouplingOperator coupling, double dt);

  const SplitOperator& propagator() const noexcept { return u_; }
  const CouplingOperator& coupling() const noexcept { return w_; }
  void advance(PerturbativeState& ps) const;

 private:
  SplitOperator u_;
  CouplingOperator w_;
};

PerturbativeState simple_algorithm_step(const PerturbativeState& ps, const SystemHamiltonian& h,
                                        const CouplingOperator& coupling);

/// psi <- exp(-i tau [[V1, w], [w, V0]]) psi pointwise.
void apply_coupled_potential(TwoComponentWaveFunction& psi, std::span<const double> v1,
                             std::span<const double> v0, double w, double tau);

/// Split-operator step on the full coupled Hamiltonian with the field at the step midpoint.
class ExactPropagator {
 public:
  ExactPropagator(const SystemHamiltonian& h, CouplingOperator coupling, double dt);

  double dt() const noexcept { return dt_; }
  void advance(TwoComponentWaveFunction& psi, double t_mid) const;

 private:
  SystemHamiltonian h_;
  CouplingOperator w_;
  double dt_;
  FourierTransform fft_;
  ComplexVector kinetic_;
};

TwoComponentWaveFunction exact_step(const TwoComponentWaveFunction& state,
                                    const SystemHamiltonian& h, const CouplingOperator& coupling,
                                    double t_mid, double dt);

/// Iterated-integral perturbative solution over [t_start, t_start + dt] by composite
/// trapezoid at n_sub + 1 nodes. The free propagator between two nodes is a single
/// split-operator step of the elapsed time. Throws ConfigError for n_sub < 64.
TwoComponentWaveFunction perturbative_reference_one_step(const TwoComponentWaveFunction& psi0,
                                                         const SystemHamiltonian& h,
                                                         const CouplingOperator& coupling,
                                                         double dt, std::size_t k,
                                                         std::size_t n_sub,
                                                         double t_start = 0.0);

}  // namespace tdpt
