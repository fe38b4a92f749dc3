#include "tdpt/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tdpt/errors.hpp"

namespace tdpt {

namespace {
const double kLn2 = std::numbers::ln2;

void validate(double beta_prime) {
  if (!(beta_prime > 0.0) || !std::isfinite(beta_prime)) {
    throw ConfigError("pulse beta' must be positive and finite");
  }
}
}  // namespace

double LaserPulse::beta_from_fwhm(double tau_prime) {
  if (!(tau_prime > 0.0)) throw ConfigError("pulse FWHM must be positive");
  return 4.0 * kLn2 / (tau_prime * tau_prime);
}

double LaserPulse::fwhm_from_beta(double beta_prime) {
  validate(beta_prime);
  return std::sqrt(4.0 * kLn2 / beta_prime);
}

LaserPulse LaserPulse::unchirped(double e0_prime, double beta_prime, double t_d, double omega0) {
  validate(beta_prime);
  LaserPulse p;
  p.variant_ = PulseVariant::Unchirped;
  p.e0_prime_ = e0_prime;
  p.beta_prime_ = beta_prime;
  p.t_d_ = t_d;
  p.omega0_ = omega0;
  p.b2_ = 0.0;
  p.e0_mod_ = std::abs(e0_prime);
  p.beta_ = beta_prime;
  p.a2_ = 0.0;
  p.amplitude_ = e0_prime;
  return p;
}

LaserPulse LaserPulse::chirped(double e0_prime, double beta_prime, double t_d, double omega0,
                               double b2) {
  validate(beta_prime);
  LaserPulse p;
  p.variant_ = PulseVariant::Chirped;
  p.e0_prime_ = e0_prime;
  p.beta_prime_ = beta_prime;
  p.t_d_ = t_d;
  p.omega0_ = omega0;
  p.b2_ = b2;
  const double bb = beta_prime * b2;
  p.e0_mod_ = std::pow(1.0 + 4.0 * bb * bb, -0.25) * std::abs(e0_prime);
  p.beta_ = 1.0 / (1.0 / beta_prime + 4.0 * beta_prime * b2 * b2);
  p.a2_ = b2 / (1.0 / (4.0 * beta_prime * beta_prime) + b2 * b2);
  p.amplitude_ = std::copysign(p.e0_mod_, e0_prime);
  return p;
}

double LaserPulse::tau_prime() const noexcept { return std::sqrt(4.0 * kLn2 / beta_prime_); }

double LaserPulse::chirped_fwhm() const noexcept { return std::sqrt(4.0 * kLn2 / beta_); }

double field_at(const LaserPulse& pulse, double t) noexcept {
  const double s = t - pulse.t_d();
  return pulse.amplitude() * std::exp(-pulse.beta() * s * s) *
         std::cos(pulse.omega0() * s + 0.5 * pulse.a2() * s * s);
}

EnvelopePhase phase_and_envelope(const LaserPulse& pulse, double t) noexcept {
  const double s = t - pulse.t_d();
  double phase = pulse.omega0() * s + 0.5 * pulse.a2() * s * s;
  if (pulse.amplitude() < 0.0) phase += std::numbers::pi;
  return {pulse.e0_mod() * std::exp(-pulse.beta() * s * s), phase};
}

namespace {

template <class F>
double trapezoid_from_zero(F&& f, double t, double dt) {
  if (!(dt > 0.0)) throw DomainError("quadrature step must be positive");
  if (t <= 0.0) return 0.0;
  const auto n_full = static_cast<std::size_t>(std::floor(t / dt));
  double sum = 0.0;
  double prev = f(0.0);
  for (std::size_t j = 1; j <= n_full; ++j) {
    const double cur = f(static_cast<double>(j) * dt);
    sum += 0.5 * dt * (prev + cur);
    prev = cur;
  }
  const double t_last = static_cast<double>(n_full) * dt;
  const double rest = t - t_last;
  if (rest > 1e-12 * dt) sum += 0.5 * rest * (prev + f(t));
  return sum;
}

}  // namespace

double envelope_energy(const LaserPulse& pulse, double t, double dt) {
  return trapezoid_from_zero(
      [&](double s) {
        const double a = phase_and_envelope(pulse, s).envelope;
        return a * a;
      },
      t, dt);
}

double envelope_energy(const LaserPulse& pulse, double t) {
  return envelope_energy(pulse, t, pulse.chirped_fwhm() / 2000.0);
}

double field_energy(const LaserPulse& pulse, double t, double dt) {
  return trapezoid_from_zero(
      [&](double s) {
        const double e = field_at(pulse, s);
        return e * e;
      },
      t, dt);
}

}  // namespace tdpt
