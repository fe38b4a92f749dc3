#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tdpt/pulse.hpp"

namespace tdpt {

/// -(mu^2 dt / 2) * integral_0^t A^2 (slowly varying envelope form).
double stationary_prediction(const LaserPulse& pulse, double mu, double dt, double t);

/// -mu^2 dt * integral_0^t E^2 (no cycle averaging).
double stationary_prediction_unaveraged(const LaserPulse& pulse, double mu, double dt, double t);

/// Closed erf form of the averaged prediction for a chirped Gaussian pulse:
/// S/2 * (1 + erf(sqrt(2 beta) (t - t_d))) with S the asymptote.
double stationary_prediction_chirped(double mu, double dt, double e0_prime, double tau_prime,
                                     double b2, double t_d, double t);

/// -mu^2 dt E0'^2 tau' sqrt(pi / (32 ln2)).
double stationary_asymptote(double mu, double dt, double e0_prime, double tau_prime);

/// (-1)^{k-m}/m * t^{2m} / (k! (2m-1-k)!) * w_bar^{2m}. DomainError outside k < 2m <= 2k.
double oscillatory_prediction(double t, std::size_t m, std::size_t k, double w_bar);

/// RMS of mu E(t) over [window.first, window.second]; default window is the FWHM of
/// the envelope around t_d. Returns 0 and warns for a zero field.
double estimate_w_bar(const LaserPulse& pulse, double mu,
                      std::optional<std::pair<double, double>> window = std::nullopt);

struct OscillatoryTerm {
  std::size_t m;
  int sign;
  std::vector<double> magnitude;  ///< |prediction| at each time
};

struct PredictionSet {
  double dt = 0.0;
  std::size_t k = 0;
  std::vector<double> times;
  std::vector<double> stationary_leading;  ///< envelope-integral form
  std::vector<double> stationary_chirped;  ///< erf form
  double stationary_asymptote = 0.0;
  double w_bar = 0.0;
  std::vector<OscillatoryTerm> oscillatory_terms;
};

PredictionSet predict(const LaserPulse& pulse, double mu, double dt, std::size_t k,
                      const std::vector<double>& times,
                      std::optional<double> w_bar_override = std::nullopt);

}  // namespace tdpt
