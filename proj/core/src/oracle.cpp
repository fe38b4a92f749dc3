#include "tdpt/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <tuple>

#include "tdpt/errors.hpp"

namespace tdpt {

namespace {

const Complex kI{0.0, 1.0};

void require_oscillatory_window(std::size_t m, std::size_t k) {
  if (!(k < 2 * m && m <= k)) {
    throw DomainError("(m, k) = (" + std::to_string(m) + ", " + std::to_string(k) +
                      ") outside the window k < 2m <= 2k");
  }
}

// Visits every nu^(n,m) in the documented order without materializing the list.
void for_each_combination(std::size_t n, std::size_t m,
                          const std::function<void(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> v(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t slot, unsigned remaining) {
    if (slot + 1 == n) {
      v[slot] = remaining;
      visit(v);
      return;
    }
    for (unsigned c = remaining + 1; c-- > 0;) {
      v[slot] = c;
      rec(slot + 1, remaining - c);
    }
  };
  rec(0, static_cast<unsigned>(m));
}

// psi <- W(t_n)^{nu_n} U ... W(t_1)^{nu_1} U psi with t_q = q dt.
void apply_string(const std::vector<unsigned>& nu, const SplitOperator& u,
                  const CouplingOperator& coupling, double dt, TwoComponentWaveFunction& psi) {
  for (std::size_t q = 0; q < nu.size(); ++q) {
    u.apply(psi);
    const double t = static_cast<double>(q + 1) * dt;
    for (unsigned p = 0; p < nu[q]; ++p) coupling.apply(t, psi);
  }
}

}  // namespace

unsigned CombinationVector::total() const noexcept {
  unsigned s = 0;
  for (auto c : components) s += c;
  return s;
}

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt factorial(std::size_t n) {
  BigInt r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

std::uint64_t combination_count(std::size_t n, std::size_t m) {
  if (n == 0) throw DomainError("combinations need at least one slot");
  const BigInt c = binomial(n + m - 1, m);
  if (c > BigInt(std::numeric_limits<std::int64_t>::max())) {
    throw CapacityError("combination count C(" + std::to_string(n + m - 1) + ", " +
                        std::to_string(m) + ") exceeds 2^63");
  }
  return static_cast<std::uint64_t>(c);
}

std::vector<CombinationVector> combinations_with_repetition(std::size_t n, std::size_t m) {
  const auto count = combination_count(n, m);
  std::vector<CombinationVector> out;
  out.reserve(static_cast<std::size_t>(count));
  for_each_combination(n, m, [&](const std::vector<unsigned>& v) { out.push_back({v}); });
  return out;
}

TwoComponentWaveFunction closed_form_wavefunction(std::size_t n, std::size_t k, double dt,
                                                  const SystemHamiltonian& h,
                                                  const CouplingOperator& coupling,
                                                  const TwoComponentWaveFunction& psi_init) {
  if (n > 8 || k > 5) throw CapacityError("closed form limited to n <= 8 and k <= 5");
  const SplitOperator u(h, dt);
  if (n == 0) return psi_init;
  TwoComponentWaveFunction result(psi_init.grid());
  TwoComponentWaveFunction order_sum(psi_init.grid());
  Complex factor = 1.0;
  for (std::size_t m = 0; m <= k; ++m) {
    order_sum.set_zero();
    for_each_combination(n, m, [&](const std::vector<unsigned>& nu) {
      TwoComponentWaveFunction psi = psi_init;
      apply_string(nu, u, coupling, dt, psi);
      order_sum += psi;
    });
    result.axpy(factor, order_sum);
    factor *= -kI * dt;
  }
  return result;
}

double stationary_closed_form(std::size_t n, std::size_t m, double dt,
                              std::span<const double> w_values) {
  if (m < 1) throw DomainError("stationary closed form needs m >= 1");
  if (w_values.size() != n) throw UsageError("need exactly n coupling samples");
  if (n == 0) throw DomainError("stationary closed form needs n >= 1");
  if (combination_count(n, m) > 10'000'000ULL) {
    throw CapacityError("stationary closed form enumeration exceeds 1e7 terms");
  }
  std::vector<double> w2(n);
  for (std::size_t j = 0; j < n; ++j) w2[j] = w_values[j] * w_values[j];
  double sum = 0.0;
  for_each_combination(n, m, [&](const std::vector<unsigned>& nu) {
    double prod = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      for (unsigned p = 0; p < nu[j]; ++p) prod *= w2[j];
    }
    sum += prod;
  });
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  return sign * std::pow(dt, static_cast<double>(2 * m)) * sum;
}

Rational xi_direct(std::size_t m, std::size_t k) {
  if (m < 1 || k < m) throw DomainError("xi needs 1 <= m <= k");
  const auto mm = static_cast<long>(m);
  const auto span = static_cast<long>(k - m);
  Rational sum = 0;
  for (long j = -span; j <= span; ++j) {
    if (mm + j < 0 || mm - j < 0) continue;
    const BigInt denom = factorial(static_cast<std::size_t>(mm + j)) *
                         factorial(static_cast<std::size_t>(mm - j));
    Rational term(BigInt(1), denom);
    if (j % 2 != 0) term = -term;
    sum += term;
  }
  return sum;
}

Rational xi_closed(std::size_t m, std::size_t k) {
  require_oscillatory_window(m, k);
  const BigInt denom = BigInt(m) * factorial(k) * factorial(2 * m - 1 - k);
  Rational r(BigInt(1), denom);
  if ((k - m) % 2 != 0) r = -r;
  return r;
}

BigInt surviving_bracket_count(std::size_t n, std::size_t m, std::size_t k) {
  require_oscillatory_window(m, k);
  if (n < 1) throw DomainError("bracket count needs n >= 1");
  if (n + 2 * m > 100000) throw CapacityError("bracket count arguments too large");
  BigInt sum = 0;
  for (std::size_t j = 2 * m - k; j <= k; ++j) {
    BigInt term = binomial(n + j - 1, j) * binomial(n + 2 * m - j - 1, 2 * m - j);
    if (j % 2 != 0) term = -term;
    sum += term;
  }
  return sum < 0 ? BigInt(-sum) : sum;
}

AnnihilationReport annihilation_check(std::size_t n, std::size_t m, std::size_t k,
                                      const SystemHamiltonian& h,
                                      const CouplingOperator& coupling, double dt,
                                      const TwoComponentWaveFunction& psi_init) {
  require_oscillatory_window(m, k);
  if (n < 1 || n > 4 || 2 * m > 8) throw CapacityError("annihilation check limited to n <= 4, 2m <= 8");
  if (h.grid().size() > 16) throw CapacityError("annihilation check needs a grid of <= 16 points");

  struct Group {
    long net = 0;
    std::vector<unsigned> nu;
    std::vector<unsigned> rho;
  };
  std::map<std::vector<unsigned>, Group> groups;
  AnnihilationReport report;
  report.expected_sign = ((k - m) % 2 == 0) ? 1 : -1;

  // Canonical string of U^+ W_1^nu_1 ... U^+ W_n^nu_n W_n^rho_n U ... W_1^rho_1 U:
  // even merged powers in the middle are scalars and let U^+ U cancel, so they are
  // contracted outward until the first odd merged power.
  auto canonical = [n](const std::vector<unsigned>& nu, const std::vector<unsigned>& rho) {
    std::vector<unsigned> key;
    std::size_t q = n;
    while (q > 0) {
      const unsigned c = nu[q - 1] + rho[q - 1];
      key.push_back(c);
      --q;
      if (c % 2 != 0) break;
    }
    key.insert(key.end(), nu.begin(), nu.begin() + static_cast<std::ptrdiff_t>(q));
    key.insert(key.end(), rho.begin(), rho.begin() + static_cast<std::ptrdiff_t>(q));
    return key;
  };

  const std::size_t two_m = 2 * m;
  const std::size_t j_lo = two_m > k ? two_m - k : 0;
  const std::size_t j_hi = std::min(two_m, k);
  for (std::size_t j = j_lo; j <= j_hi; ++j) {
    const long sign = ((m + j) % 2 == 0) ? 1 : -1;
    for_each_combination(n, j, [&](const std::vector<unsigned>& nu) {
      for_each_combination(n, two_m - j, [&](const std::vector<unsigned>& rho) {
        auto [it, inserted] = groups.try_emplace(canonical(nu, rho));
        if (inserted) {
          it->second.nu = nu;
          it->second.rho = rho;
        }
        it->second.net += sign;
        ++report.bracket_terms;
      });
    });
  }

  const SplitOperator u(h, dt);
  report.distinct_strings = groups.size();
  report.holds = true;
  Complex total{};
  for (const auto& [key, g] : groups) {
    if (g.net == 0) continue;
    ++report.surviving_strings;
    report.surviving_multiplicity += BigInt(g.net < 0 ? -g.net : g.net);
    const int s = g.net > 0 ? 1 : -1;
    if (s != report.expected_sign) report.holds = false;
    TwoComponentWaveFunction bra = psi_init;
    TwoComponentWaveFunction ket = psi_init;
    apply_string(g.nu, u, coupling, dt, bra);
    apply_string(g.rho, u, coupling, dt, ket);
    total += static_cast<double>(g.net) * inner_product(bra, ket);
  }
  const double scale = std::pow(dt, static_cast<double>(two_m));
  report.norm_order = scale * total.real();
  report.max_imaginary = std::abs(scale * total.imag());
  return report;
}

namespace {

using Triple = std::array<long, 3>;

bool same_multiset(std::vector<Triple> a, std::vector<Triple> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool pyramid_identity(long two_m) {
  std::vector<Triple> lhs, rhs;
  for (long j = 0; j <= two_m; ++j)
    for (long d = 0; d <= j; ++d)
      for (long s = j - d; s <= two_m - d; ++s) lhs.push_back({j, d, s});
  for (long s = 0; s <= two_m; ++s)
    for (long d = 0; d <= two_m - s; ++d)
      for (long j = d; j <= d + s; ++j) rhs.push_back({j, d, s});
  return !lhs.empty() && same_multiset(std::move(lhs), std::move(rhs));
}

// Frustum cut by 2m - k <= j <= k - 2r and s + d <= 2m - 2r.
bool frustum_identity(long two_m, long k, long r) {
  std::vector<Triple> lhs, rhs;
  for (long j = two_m - k; j <= k - 2 * r; ++j)
    for (long d = 0; d <= j; ++d)
      for (long s = j - d; s <= two_m - 2 * r - d; ++s) lhs.push_back({j, d, s});
  for (long s = 0; s <= two_m - 2 * r; ++s)
    for (long d = std::max(two_m - k - s, 0L); d <= std::min(two_m - 2 * r - s, k - 2 * r); ++d)
      for (long j = std::max(two_m - k, d); j <= std::min(d + s, k - 2 * r); ++j)
        rhs.push_back({j, d, s});
  return same_multiset(std::move(lhs), std::move(rhs));
}

void require_even_order(std::size_t two_m) {
  if (two_m == 0 || two_m % 2 != 0 || two_m > 12) {
    throw DomainError("pyramid check needs an even order 2 <= two_m <= 12");
  }
}

}  // namespace

bool pyramid_reorder_check(std::size_t two_m, std::size_t k) {
  require_even_order(two_m);
  const std::size_t m = two_m / 2;
  if (k < m || k >= two_m) throw DomainError("frustum truncation needs m <= k < 2m");
  const auto tm = static_cast<long>(two_m);
  const auto kk = static_cast<long>(k);
  for (long r = 0; r <= kk - static_cast<long>(m); ++r) {
    if (!frustum_identity(tm, kk, r)) return false;
  }
  return true;
}

bool pyramid_reorder_check(std::size_t two_m) {
  require_even_order(two_m);
  if (!pyramid_identity(static_cast<long>(two_m))) return false;
  for (std::size_t k = two_m / 2; k < two_m; ++k) {
    if (!pyramid_reorder_check(two_m, k)) return false;
  }
  return true;
}

bool alternating_sum_check(std::size_t max_q) {
  for (std::size_t p = 0; p <= max_q; ++p) {
    for (std::size_t q = p; q <= max_q; ++q) {
      long direct = 0;
      for (std::size_t j = p; j <= q; ++j) direct += (j % 2 == 0) ? 1 : -1;
      const bool even_span = (q - p) % 2 == 0;
      const long from_lower = even_span ? ((p % 2 == 0) ? 1 : -1) : 0;
      const long from_upper = even_span ? ((q % 2 == 0) ? 1 : -1) : 0;
      if (direct != from_lower || direct != from_upper) return false;
    }
  }
  return true;
}

}  // namespace tdpt
