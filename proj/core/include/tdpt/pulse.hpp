#pragma once

namespace tdpt {

enum class PulseVariant { Unchirped, Chirped };

struct EnvelopePhase {
  double envelope;  ///< A(t) >= 0
  double phase;     ///< Phi(t); E(t) = A cos(Phi)
};

/// Gaussian laser pulse, optionally with a linear spectral chirp b2.
///
/// The field is E(t) = A0 exp(-beta s^2) cos(omega0 s + a2 s^2 / 2) with s = t - t_d.
/// For the chirped variant the amplitude is E0_mod carrying the sign of E0_prime, and
/// (beta, a2) follow from (beta_prime, b2).
class LaserPulse {
 public:
  static LaserPulse unchirped(double e0_prime, double beta_prime, double t_d, double omega0);
  static LaserPulse chirped(double e0_prime, double beta_prime, double t_d, double omega0,
                            double b2);

  /// beta' = 4 ln2 / tau'^2 for an intensity FWHM tau'.
  static double beta_from_fwhm(double tau_prime);
  static double fwhm_from_beta(double beta_prime);

  PulseVariant variant() const noexcept { return variant_; }
  double e0_prime() const noexcept { return e0_prime_; }
  double beta_prime() const noexcept { return beta_prime_; }
  double t_d() const noexcept { return t_d_; }
  double omega0() const noexcept { return omega0_; }
  double b2() const noexcept { return b2_; }

  double e0_mod() const noexcept { return e0_mod_; }
  double beta() const noexcept { return beta_; }
  double a2() const noexcept { return a2_; }
  double tau_prime() const noexcept;
  /// FWHM of the stretched pulse, sqrt(4 ln2 / beta).
  double chirped_fwhm() const noexcept;
  /// Signed peak amplitude used in the field formula.
  double amplitude() const noexcept { return amplitude_; }

 private:
  LaserPulse() = default;

  PulseVariant variant_ = PulseVariant::Unchirped;
  double e0_prime_ = 0.0;
  double beta_prime_ = 0.0;
  double t_d_ = 0.0;
  double omega0_ = 0.0;
  double b2_ = 0.0;
  double e0_mod_ = 0.0;
  double beta_ = 0.0;
  double a2_ = 0.0;
  double amplitude_ = 0.0;
};

double field_at(const LaserPulse& pulse, double t) noexcept;
EnvelopePhase phase_and_envelope(const LaserPulse& pulse, double t) noexcept;

/// Composite trapezoid of A(t')^2 over [0, t] on nodes j*dt; the last
/// partial interval is included with its own width.
double envelope_energy(const LaserPulse& pulse, double t, double dt);
/// Same as above with a step of chirped_fwhm / 2000.
double envelope_energy(const LaserPulse& pulse, double t);

/// Composite trapezoid of E(t')^2 over [0, t] on nodes j*dt.
double field_energy(const LaserPulse& pulse, double t, double dt);

}  // namespace tdpt
