#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tdpt/grid.hpp"
#include "tdpt/propagator.hpp"

namespace tdpt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// nu^(n,m): n non-negative slot counts summing to m.
struct CombinationVector {
  std::vector<unsigned> components;

  unsigned total() const noexcept;
  bool operator==(const CombinationVector&) const = default;
};

/// C(n+m-1, m). Throws CapacityError if the count exceeds 2^63.
std::uint64_t combination_count(std::size_t n, std::size_t m);

/// All combinations, ordered so that earlier slots hold more counts first
/// ((2,3) gives (3,0),(2,1),(1,2),(0,3)). Requires n >= 1.
std::vector<CombinationVector> combinations_with_repetition(std::size_t n, std::size_t m);

BigInt binomial(std::size_t n, std::size_t k);
BigInt factorial(std::size_t n);

/// Evaluates the combinatorial closed form of the simple-algorithm wave function
/// after n steps by direct operator application. Requires n <= 8 and k <= 5.
TwoComponentWaveFunction closed_form_wavefunction(std::size_t n, std::size_t k, double dt,
                                                  const SystemHamiltonian& h,
                                                  const CouplingOperator& coupling,
                                                  const TwoComponentWaveFunction& psi_init);

/// (-1)^m dt^{2m} sum over nu^(n,m) of prod_j w_j^{2 nu_j}, with w_j = W(t_j) for
/// j = 1..n. Throws CapacityError above 1e7 terms.
double stationary_closed_form(std::size_t n, std::size_t m, double dt,
                              std::span<const double> w_values);

Rational xi_direct(std::size_t m, std::size_t k);
/// Requires k < 2m <= 2k, otherwise DomainError.
Rational xi_closed(std::size_t m, std::size_t k);

/// Requires k < 2m <= 2k, otherwise DomainError.
BigInt surviving_bracket_count(std::size_t n, std::size_t m, std::size_t k);

struct AnnihilationReport {
  bool holds = false;
  int expected_sign = 0;
  std::size_t bracket_terms = 0;     ///< number of (j, nu, rho) terms enumerated
  std::size_t distinct_strings = 0;  ///< groups after canonicalization
  std::size_t surviving_strings = 0;
  BigInt surviving_multiplicity = 0;  ///< sum of |net sign| over groups
  double norm_order = 0.0;            ///< dt^{2m} sum over groups of net * bracket value
  double max_imaginary = 0.0;
};

/// Enumerates all bracket terms of norm order 2m at step n, groups identical operator
/// strings, and checks that every surviving group carries sign (-1)^(k-m).
/// Requires n <= 4, 2m <= 8, k < 2m <= 2k and a grid of at most 16 points.
AnnihilationReport annihilation_check(std::size_t n, std::size_t m, std::size_t k,
                                      const SystemHamiltonian& h,
                                      const CouplingOperator& coupling, double dt,
                                      const TwoComponentWaveFunction& psi_init);

/// Compares the index multisets of the pyramid and frustum sum reorderings for the
/// given even order and every k with two_m / 2 <= k < two_m. Requires two_m <= 12.
bool pyramid_reorder_check(std::size_t two_m);
/// Same, restricted to a single truncation k.
bool pyramid_reorder_check(std::size_t two_m, std::size_t k);

/// Checks the closed forms of sum_{j=p}^{q} (-1)^j for 0 <= p <= q <= max_q.
bool alternating_sum_check(std::size_t max_q);

}  // namespace tdpt
