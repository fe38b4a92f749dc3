#include "tdpt/propagator.hpp"

#include <cmath>
#include <string>

#include "tdpt/errors.hpp"

namespace tdpt {

namespace {

const Complex kI{0.0, 1.0};

ComplexVector phase_factors(std::span<const double> v, double tau) {
  ComplexVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::exp(-kI * v[i] * tau);
  return out;
}

ComplexVector kinetic_factors(const SpatialGrid& grid, double mass, double dt) {
  const auto k = grid.momentum_values();
  ComplexVector out(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    out[i] = std::exp(-kI * (k[i] * k[i] / (2.0 * mass)) * dt);
  }
  return out;
}

bool all_zero(std::span<const Complex> v) {
  for (const auto& z : v) {
    if (z != Complex{}) return false;
  }
  return true;
}

void multiply(std::span<Complex> v, const ComplexVector& f, bool conjugate) {
  if (conjugate) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] *= std::conj(f[i]);
  } else {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] *= f[i];
  }
}

void kinetic_step(std::span<Complex> v, const FourierTransform& fft, const ComplexVector& kin,
                  bool conjugate) {
  fft.forward(v);
  multiply(v, kin, conjugate);
  fft.backward(v);
}

}  // namespace

std::vector<double> LinearPotentialPair::potential1(const SpatialGrid& grid) const {
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -m0 * grid.position(i) + c1;
  return v;
}

std::vector<double> LinearPotentialPair::potential0(const SpatialGrid& grid) const {
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = m0 * grid.position(i) + c0;
  return v;
}

SystemHamiltonian::SystemHamiltonian(SpatialGrid grid, double mass, std::vector<double> potential1,
                                     std::vector<double> potential0)
    : grid_(std::move(grid)), mass_(mass), v1_(std::move(potential1)), v0_(std::move(potential0)) {
  if (!(mass_ > 0.0) || !std::isfinite(mass_)) throw ConfigError("mass must be positive");
  if (v1_.size() != grid_.size() || v0_.size() != grid_.size()) {
    throw UsageError("potential length does not match the grid");
  }
}

SystemHamiltonian SystemHamiltonian::linear(SpatialGrid grid, double mass,
                                            const LinearPotentialPair& p) {
  auto v1 = p.potential1(grid);
  auto v0 = p.potential0(grid);
  return SystemHamiltonian(std::move(grid), mass, std::move(v1), std::move(v0));
}

SystemHamiltonian SystemHamiltonian::free(SpatialGrid grid, double mass) {
  std::vector<double> zero(grid.size(), 0.0);
  return SystemHamiltonian(std::move(grid), mass, zero, zero);
}

CouplingOperator::CouplingOperator(double mu, const LaserPulse& pulse)
    : mu_(mu), field_([pulse](double t) { return field_at(pulse, t); }) {}

CouplingOperator::CouplingOperator(double mu, std::function<double(double)> field)
    : mu_(mu), field_(std::move(field)) {
  if (!field_) throw UsageError("coupling field function is empty");
}

CouplingOperator CouplingOperator::from_samples(double mu, double dt,
                                                std::vector<double> field_samples) {
  if (!(dt > 0.0)) throw UsageError("sample spacing must be positive");
  return CouplingOperator(mu, [dt, samples = std::move(field_samples)](double t) {
    const double x = t / dt;
    const double j = std::round(x);
    if (std::abs(x - j) > 1e-9 || j < 1.0 || j > static_cast<double>(samples.size())) {
      throw UsageError("sampled field evaluated off its sample grid at t = " + std::to_string(t));
    }
    return samples[static_cast<std::size_t>(j) - 1];
  });
}

CouplingOperator CouplingOperator::zero() {
  return CouplingOperator(0.0, [](double) { return 0.0; });
}

void CouplingOperator::apply(double t, TwoComponentWaveFunction& psi) const {
  const double w = matrix_element(t);
  auto a = psi.psi1();
  auto b = psi.psi0();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Complex tmp = a[i];
    a[i] = w * b[i];
    b[i] = w * tmp;
  }
}

SplitOperator::SplitOperator(const SystemHamiltonian& h, double dt)
    : SplitOperator(h, dt, std::make_shared<const FourierTransform>(h.grid().size())) {}

SplitOperator::SplitOperator(const SystemHamiltonian& h, double dt,
                             std::shared_ptr<const FourierTransform> fft)
    : grid_(h.grid()), dt_(dt), fft_(std::move(fft)) {
  if (!(dt >= 0.0) || !std::isfinite(dt)) throw UsageError("time step must be non-negative");
  if (!fft_ || fft_->size() != grid_.size()) throw UsageError("Fourier transform size mismatch");
  half_v1_ = phase_factors(h.potential1(), 0.5 * dt);
  half_v0_ = phase_factors(h.potential0(), 0.5 * dt);
  kinetic_ = kinetic_factors(grid_, h.mass(), dt);
}

void SplitOperator::apply_impl(TwoComponentWaveFunction& psi, bool adjoint) const {
  if (!(psi.grid() == grid_)) throw UsageError("propagating a wave function on a foreign grid");
  // Zero components stay exactly zero, so their transforms are skipped.
  for (auto [v, half] : {std::pair{psi.psi1(), &half_v1_}, std::pair{psi.psi0(), &half_v0_}}) {
    if (all_zero(v)) continue;
    multiply(v, *half, adjoint);
    kinetic_step(v, *fft_, kinetic_, adjoint);
    multiply(v, *half, adjoint);
  }
}

void SplitOperator::apply(TwoComponentWaveFunction& psi) const { apply_impl(psi, false); }

void SplitOperator::apply_adjoint(TwoComponentWaveFunction& psi) const { apply_impl(psi, true); }

TwoComponentWaveFunction split_operator_step(const TwoComponentWaveFunction& state,
                                             const SystemHamiltonian& h, double dt) {
  if (!(dt > 0.0)) throw UsageError("time step must be positive");
  TwoComponentWaveFunction out = state;
  SplitOperator(h, dt).apply(out);
  return out;
}

PerturbativeState::PerturbativeState(const TwoComponentWaveFunction& initial, std::size_t max_order,
                                     double dt)
    : dt_(dt) {
  if (max_order > kMaxPerturbationOrder) {
    throw CapacityError("perturbation order " + std::to_string(max_order) + " exceeds " +
                        std::to_string(kMaxPerturbationOrder));
  }
  if (!(dt > 0.0)) throw UsageError("time step must be positive");
  orders_.reserve(max_order + 1);
  orders_.push_back(initial);
  for (std::size_t m = 1; m <= max_order; ++m) orders_.emplace_back(initial.grid());
}

TwoComponentWaveFunction PerturbativeState::reconstructed() const {
  TwoComponentWaveFunction sum = orders_.front();
  for (std::size_t m = 1; m < orders_.size(); ++m) sum += orders_[m];
  return sum;
}

SimpleAlgorithm::SimpleAlgorithm(const SystemHamiltonian& h, CouplingOperator coupling, double dt)
    : u_(h, dt), w_(std::move(coupling)) {
  if (!(dt > 0.0)) throw UsageError("time step must be positive");
}

void SimpleAlgorithm::advance(PerturbativeState& ps) const {
  if (ps.dt() != u_.dt()) throw UsageError("perturbative state and algorithm use different dt");
  const double t_next = static_cast<double>(ps.step_ + 1) * ps.dt();
  const Complex c = -kI * ps.dt() * w_.matrix_element(t_next);
  auto& orders = ps.orders_;
  for (std::size_t m = 0; m < orders.size(); ++m) {
    u_.apply(orders[m]);
    if (m == 0) continue;
    // orders[m-1] already holds the updated lower order.
    auto dst1 = orders[m].psi1();
    auto dst0 = orders[m].psi0();
    const auto src1 = orders[m - 1].psi1();
    const auto src0 = orders[m - 1].psi0();
    for (std::size_t i = 0; i < dst1.size(); ++i) {
      dst1[i] += c * src0[i];
      dst0[i] += c * src1[i];
    }
  }
  ++ps.step_;
}

PerturbativeState simple_algorithm_step(const PerturbativeState& ps, const SystemHamiltonian& h,
                                        const CouplingOperator& coupling) {
  PerturbativeState next = ps;
  SimpleAlgorithm(h, coupling, ps.dt()).advance(next);
  return next;
}

void apply_coupled_potential(TwoComponentWaveFunction& psi, std::span<const double> v1,
                             std::span<const double> v0, double w, double tau) {
  auto p1 = psi.psi1();
  auto p0 = psi.psi0();
  if (v1.size() != p1.size() || v0.size() != p0.size()) {
    throw UsageError("potential length does not match the wave function");
  }
  for (std::size_t i = 0; i < p1.size(); ++i) {
    const double a = 0.5 * (v1[i] + v0[i]);
    const double b = 0.5 * (v1[i] - v0[i]);
    const double omega = std::hypot(b, w);
    const double x = omega * tau;
    const double cs = std::cos(x);
    const double sinc_tau = std::abs(x) < 1e-8 ? tau * (1.0 - x * x / 6.0) : std::sin(x) / omega;
    const Complex global = std::exp(-kI * a * tau);
    const Complex d1 = Complex(cs, -sinc_tau * b);
    const Complex d0 = Complex(cs, sinc_tau * b);
    const Complex off = Complex(0.0, -sinc_tau * w);
    const Complex x1 = p1[i];
    const Complex x0 = p0[i];
    p1[i] = global * (d1 * x1 + off * x0);
    p0[i] = global * (off * x1 + d0 * x0);
  }
}

ExactPropagator::ExactPropagator(const SystemHamiltonian& h, CouplingOperator coupling, double dt)
    : h_(h), w_(std::move(coupling)), dt_(dt), fft_(h.grid().size()) {
  if (!(dt > 0.0)) throw UsageError("time step must be positive");
  kinetic_ = kinetic_factors(h_.grid(), h_.mass(), dt);
}

void ExactPropagator::advance(TwoComponentWaveFunction& psi, double t_mid) const {
  if (!(psi.grid() == h_.grid())) throw UsageError("propagating a wave function on a foreign grid");
  const double w = w_.matrix_element(t_mid);
  apply_coupled_potential(psi, h_.potential1(), h_.potential0(), w, 0.5 * dt_);
  for (auto v : {psi.psi1(), psi.psi0()}) {
    if (!all_zero(v)) kinetic_step(v, fft_, kinetic_, false);
  }
  apply_coupled_potential(psi, h_.potential1(), h_.potential0(), w, 0.5 * dt_);
}

TwoComponentWaveFunction exact_step(const TwoComponentWaveFunction& state,
                                    const SystemHamiltonian& h, const CouplingOperator& coupling,
                                    double t_mid, double dt) {
  TwoComponentWaveFunction out = state;
  ExactPropagator(h, coupling, dt).advance(out, t_mid);
  return out;
}

TwoComponentWaveFunction perturbative_reference_one_step(const TwoComponentWaveFunction& psi0,
                                                         const SystemHamiltonian& h,
                                                         const CouplingOperator& coupling,
                                                         double dt, std::size_t k,
                                                         std::size_t n_sub, double t_start) {
  if (n_sub < 64) throw ConfigError("reference quadrature needs at least 64 sub-intervals");
  if (!(dt > 0.0)) throw UsageError("time step must be positive");
  if (k > kMaxPerturbationOrder) throw CapacityError("perturbation order too large");

  const double h_sub = dt / static_cast<double>(n_sub);
  auto lag_time = [&](std::size_t d) {
    return d == n_sub ? dt : dt * static_cast<double>(d) / static_cast<double>(n_sub);
  };
  auto fft = std::make_shared<const FourierTransform>(h.grid().size());
  std::vector<SplitOperator> lag;
  lag.reserve(n_sub + 1);
  for (std::size_t d = 0; d <= n_sub; ++d) lag.emplace_back(h, lag_time(d), fft);

  std::vector<TwoComponentWaveFunction> free_states;
  free_states.reserve(n_sub + 1);
  for (std::size_t i = 0; i <= n_sub; ++i) {
    free_states.push_back(psi0);
    lag[i].apply(free_states.back());
  }
  if (k == 0) return free_states.back();

  std::vector<TwoComponentWaveFunction> level = free_states;
  std::vector<TwoComponentWaveFunction> sources;
  sources.reserve(n_sub + 1);
  TwoComponentWaveFunction tmp(h.grid());
  TwoComponentWaveFunction acc(h.grid());

  for (std::size_t q = 1; q <= k; ++q) {
    sources.clear();
    for (std::size_t l = 0; l <= n_sub; ++l) {
      sources.push_back(level[l]);
      coupling.apply(t_start + lag_time(l), sources.back());
    }
    // The last level only needs its endpoint value.
    const std::size_t first = (q == k) ? n_sub : 1;
    for (std::size_t i = first; i <= n_sub; ++i) {
      acc.set_zero();
      for (std::size_t l = 0; l <= i; ++l) {
        const double weight = (l == 0 || l == i) ? 0.5 * h_sub : h_sub;
        tmp = sources[l];
        lag[i - l].apply(tmp);
        acc.axpy(weight, tmp);
      }
      level[i] = free_states[i];
      level[i].axpy(-kI, acc);
    }
  }
  return level[n_sub];
}

}  // namespace tdpt
