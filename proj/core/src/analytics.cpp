#include "tdpt/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tdpt/diagnostics.hpp"
#include "tdpt/errors.hpp"

namespace tdpt {

double stationary_prediction(const LaserPulse& pulse, double mu, double dt, double t) {
  if (t < 0.0) throw DomainError("prediction time must be non-negative");
  return -0.5 * mu * mu * dt * envelope_energy(pulse, t, dt);
}

double stationary_prediction_unaveraged(const LaserPulse& pulse, double mu, double dt, double t) {
  if (t < 0.0) throw DomainError("prediction time must be non-negative");
  return -mu * mu * dt * field_energy(pulse, t, dt);
}

double stationary_asymptote(double mu, double dt, double e0_prime, double tau_prime) {
  return -mu * mu * dt * e0_prime * e0_prime * tau_prime *
         std::sqrt(std::numbers::pi / (32.0 * std::numbers::ln2));
}

double stationary_prediction_chirped(double mu, double dt, double e0_prime, double tau_prime,
                                     double b2, double t_d, double t) {
  if (!(tau_prime > 0.0)) throw DomainError("tau' must be positive");
  const double beta_prime = LaserPulse::beta_from_fwhm(tau_prime);
  const double beta = 1.0 / (1.0 / beta_prime + 4.0 * beta_prime * b2 * b2);
  const double half = 0.5 * stationary_asymptote(mu, dt, e0_prime, tau_prime);
  return half * (1.0 + std::erf(std::sqrt(2.0 * beta) * (t - t_d)));
}

double oscillatory_prediction(double t, std::size_t m, std::size_t k, double w_bar) {
  if (!(k < 2 * m && m <= k)) {
    throw DomainError("oscillatory prediction needs k < 2m <= 2k, got m = " + std::to_string(m) +
                      ", k = " + std::to_string(k));
  }
  const double sign = ((k - m) % 2 == 0) ? 1.0 : -1.0;
  const double denom = static_cast<double>(m) * std::tgamma(static_cast<double>(k) + 1.0) *
                       std::tgamma(static_cast<double>(2 * m - k));
  return sign / denom * std::pow(t * w_bar, static_cast<double>(2 * m));
}

double estimate_w_bar(const LaserPulse& pulse, double mu,
                      std::optional<std::pair<double, double>> window) {
  const double fwhm = pulse.chirped_fwhm();
  const auto [t0, t1] = window.value_or(std::pair{pulse.t_d() - 0.5 * fwhm, pulse.t_d() + 0.5 * fwhm});
  if (!(t1 > t0)) throw DomainError("coupling estimate window must have positive length");
  const double carrier = std::abs(pulse.omega0()) + std::abs(pulse.a2()) * (t1 - t0);
  const auto n = static_cast<std::size_t>(
      std::max(4000.0, 64.0 * carrier * (t1 - t0) / (2.0 * std::numbers::pi)));
  const double h = (t1 - t0) / static_cast<double>(n);
  double sum = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    const double w = mu * field_at(pulse, t0 + static_cast<double>(i) * h);
    sum += ((i == 0 || i == n) ? 0.5 : 1.0) * w * w;
  }
  const double rms = std::sqrt(sum * h / (t1 - t0));
  if (rms == 0.0) warn("coupling estimate: field vanishes on the window, returning 0");
  return rms;
}

PredictionSet predict(const LaserPulse& pulse, double mu, double dt, std::size_t k,
                      const std::vector<double>& times, std::optional<double> w_bar_override) {
  PredictionSet set;
  set.dt = dt;
  set.k = k;
  set.times = times;
  set.stationary_asymptote = stationary_asymptote(mu, dt, pulse.e0_prime(), pulse.tau_prime());
  set.w_bar = w_bar_override.value_or(estimate_w_bar(pulse, mu));
  set.stationary_leading.reserve(times.size());
  set.stationary_chirped.reserve(times.size());
  for (double t : times) {
    set.stationary_leading.push_back(stationary_prediction(pulse, mu, dt, t));
    set.stationary_chirped.push_back(stationary_prediction_chirped(
        mu, dt, pulse.e0_prime(), pulse.tau_prime(), pulse.b2(), pulse.t_d(), t));
  }
  for (std::size_t m = k / 2 + 1; m <= k; ++m) {
    OscillatoryTerm term;
    term.m = m;
    term.sign = ((k - m) % 2 == 0) ? 1 : -1;
    term.magnitude.reserve(times.size());
    for (double t : times) term.magnitude.push_back(std::abs(oscillatory_prediction(t, m, k, set.w_bar)));
    set.oscillatory_terms.push_back(std::move(term));
  }
  return set;
}

}  // namespace tdpt
