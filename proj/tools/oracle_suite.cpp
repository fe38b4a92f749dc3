#include "oracle_suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "tdpt/norm_analysis.hpp"
#include "tdpt/oracle.hpp"
#include "tdpt/propagator.hpp"
#include "tdpt/pulse.hpp"

namespace tdpt::cli {

namespace {

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

}  // namespace

std::vector<OracleCheck> run_oracle_suite(std::size_t max_m) {
  std::vector<OracleCheck> checks;
  max_m = std::max<std::size_t>(max_m, 1);

  {
    bool ok = true;
    std::size_t cases = 0;
    for (std::size_t m = 1; m <= max_m; ++m) {
      for (std::size_t k = m; k < 2 * m; ++k, ++cases) ok = ok && xi_closed(m, k) == xi_direct(m, k);
    }
    checks.push_back({"xi closed form = direct sum", ok, std::to_string(cases) + " (m,k) pairs"});
  }

  {
    bool ok = true;
    const std::size_t top = std::min<std::size_t>(2 * max_m, 12);
    for (std::size_t two_m = 2; two_m <= top; two_m += 2) ok = ok && pyramid_reorder_check(two_m);
    checks.push_back({"pyramid / frustum sum reordering", ok, "2m <= " + std::to_string(top)});
  }

  checks.push_back({"alternating sign sums", alternating_sum_check(20), "0 <= p <= q <= 20"});

  // Small smooth test system shared by the operator-level checks.
  const auto pulse = LaserPulse::unchirped(0.4, LaserPulse::beta_from_fwhm(6.0), 4.0, 0.3);
  const CouplingOperator w(1.0, pulse);

  {
    const SpatialGrid grid(-8.0, 8.0, 16);
    const auto h = SystemHamiltonian::linear(grid, 1.0, {0.05, 0.0, 0.3});
    // Built directly: sixteen points cannot satisfy the packet resolution guard.
    TwoComponentWaveFunction psi(grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double x = grid.position(i);
      psi.psi1()[i] = std::exp(Complex(-x * x / 8.0, 0.2 * x));
    }
    psi *= 1.0 / std::sqrt(psi.norm());
    const double dt = 0.7;
    bool ok = true;
    double worst = 0.0;
    std::size_t cases = 0;
    const std::size_t top_m = std::min<std::size_t>(max_m, 3);
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::size_t m = 1; m <= top_m; ++m) {
        for (std::size_t k = m; k < 2 * m; ++k, ++cases) {
          const auto rep = annihilation_check(n, m, k, h, w, dt, psi);
          PerturbativeState ps(psi, k, dt);
          const SimpleAlgorithm alg(h, w, dt);
          for (std::size_t s = 0; s < n; ++s) alg.advance(ps);
          const double ref = norm_orders(ps).entries[m - 1].value;
          const double err = std::abs(rep.norm_order - ref);
          worst = std::max(worst, err);
          ok = ok && rep.holds && rep.surviving_multiplicity == surviving_bracket_count(n, m, k) &&
               err <= 1e-12;
        }
      }
    }
    checks.push_back({"annihilation thesis (n <= 3)", ok,
                      std::to_string(cases) + " cases, reconstruction error " + fmt("%.2e", worst)});
  }

  {
    const SpatialGrid grid(-10.0, 10.0, 32);
    const auto h = SystemHamiltonian::linear(grid, 1.0, {0.05, 0.0, 0.3});
    const auto psi = gaussian_packet(grid, 0.0, 2.5, 0.0, ElectronicState::Excited);
    const double dt = 0.5;
    double worst = 0.0;
    const std::size_t top_k = std::min<std::size_t>(max_m, 4);
    for (std::size_t k = 0; k <= top_k; ++k) {
      PerturbativeState ps(psi, k, dt);
      const SimpleAlgorithm alg(h, w, dt);
      for (std::size_t n = 1; n <= 4; ++n) {
        alg.advance(ps);
        worst = std::max(worst, max_abs_difference(closed_form_wavefunction(n, k, dt, h, w, psi),
                                                   ps.reconstructed()));
      }
    }
    checks.push_back({"closed-form wave function = simple algorithm", worst <= 1e-12,
                      "max deviation " + fmt("%.2e", worst)});
  }

  {
    const SpatialGrid grid(-10.0, 10.0, 32);
    const auto h = SystemHamiltonian::linear(grid, 1.0, {0.05, 0.0, 0.3});
    const auto psi = gaussian_packet(grid, 0.0, 2.5, 0.0, ElectronicState::Excited);
    const double dt = 0.5;
    const std::size_t top_m = std::min<std::size_t>(max_m, 2);
    PerturbativeState ps(psi, 2 * top_m, dt);
    const SimpleAlgorithm alg(h, w, dt);
    std::vector<double> samples;
    double worst = 0.0;
    for (std::size_t n = 1; n <= 30; ++n) {
      alg.advance(ps);
      samples.push_back(w.matrix_element(static_cast<double>(n) * dt));
      const auto rep = norm_orders(ps);
      for (std::size_t m = 1; m <= top_m; ++m) {
        worst = std::max(worst, std::abs(rep.entries[m - 1].value -
                                         stationary_closed_form(n, m, dt, samples)));
      }
    }
    checks.push_back({"stationary orders = closed form", worst <= 1e-12,
                      "max deviation " + fmt("%.2e", worst)});
  }

  return checks;
}

}  // namespace tdpt::cli
