#include "cyclo/lfunction.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace cyclo {

namespace {

void require_primitive_nonprincipal(const DirichletCharacter& chi, const char* who) {
  if (chi.is_principal())
    throw std::invalid_argument(std::string(who) + ": character must be non-principal");
  if (!chi.is_primitive())
    throw std::invalid_argument(std::string(who) +
                                ": character must be primitive (induce first)");
}

}  // namespace

std::complex<double> gauss_sum(const DirichletCharacter& chi) {
  if (!chi.is_primitive())
    throw std::invalid_argument("gauss_sum: character must be primitive (induce first)");
  const std::int64_t f = chi.modulus();
  if (f == 1) return {1.0, 0.0};
  std::complex<double> tau = 0.0;
  for (std::int64_t r = 1; r < f; ++r) {
    const CharacterValue v = chi(r);
    if (v.is_zero()) continue;
    // exact angle addition keeps every term a unit complex from one trig call
    tau += (v.angle() + RationalAngle(r, f)).to_complex();
  }
  return tau;
}

std::complex<double> euler_factor_two(const DirichletCharacter& chi) {
  return std::complex<double>(1.0, 0.0) - chi(2).to_complex();
}

std::complex<double> l_one_closed(const DirichletCharacter& chi) {
  require_primitive_nonprincipal(chi, "l_one_closed");
  const std::int64_t f = chi.modulus();
  const std::complex<double> tau = gauss_sum(chi);
  if (chi.is_even()) {
    // L(1, chi) = -(2 tau / f) sum_{0 < k < f/2} conj(chi(k)) log sin(pi k / f)
    std::complex<double> s = 0.0;
    for (std::int64_t k = 1; 2 * k < f; ++k) {
      const CharacterValue v = chi(k);
      if (v.is_zero()) continue;
      s += std::conj(v.to_complex()) *
           std::log(std::sin(std::numbers::pi * static_cast<double>(k) / f));
    }
    return -2.0 * tau * s / static_cast<double>(f);
  }
  // L(1, chi) = (pi i tau / f^2) sum_{k=1}^{f} conj(chi(k)) k
  std::complex<double> s = 0.0;
  for (std::int64_t k = 1; k < f; ++k) {
    const CharacterValue v = chi(k);
    if (v.is_zero()) continue;
    s += std::conj(v.to_complex()) * static_cast<double>(k);
  }
  return std::complex<double>(0.0, std::numbers::pi) * tau * s /
         static_cast<double>(f * f);
}

std::complex<double> l_e_one_closed(const DirichletCharacter& chi) {
  require_primitive_nonprincipal(chi, "l_e_one_closed");
  const std::int64_t f = chi.modulus();
  const std::complex<double> tau = gauss_sum(chi);
  if (chi.is_even()) {
    // L_E(1, chi) = (2 tau / f) sum_{0 < k < f/2} conj(chi(k)) log cos(pi k / f)
    std::complex<double> s = 0.0;
    for (std::int64_t k = 1; 2 * k < f; ++k) {
      const CharacterValue v = chi(k);
      if (v.is_zero()) continue;
      s += std::conj(v.to_complex()) *
           std::log(std::cos(std::numbers::pi * static_cast<double>(k) / f));
    }
    return 2.0 * tau * s / static_cast<double>(f);
  }
  // L_E(1, chi) = -(2 pi i tau / f^2) sum_{0 < k < f/2} conj(chi(k)) k
  std::complex<double> s = 0.0;
  for (std::int64_t k = 1; 2 * k < f; ++k) {
    const CharacterValue v = chi(k);
    if (v.is_zero()) continue;
    s += std::conj(v.to_complex()) * static_cast<double>(k);
  }
  return std::complex<double>(0.0, -2.0 * std::numbers::pi) * tau * s /
         static_cast<double>(f * f);
}

std::complex<double> l_e_one_closed_full_range(const DirichletCharacter& chi) {
  require_primitive_nonprincipal(chi, "l_e_one_closed_full_range");
  if (!chi.is_even())
    throw std::invalid_argument("l_e_one_closed_full_range: character must be even");
  const std::int64_t f = chi.modulus();
  const std::complex<double> tau = gauss_sum(chi);
  std::complex<double> s = 0.0;
  for (std::int64_t k = 1; k < f; ++k) {
    const CharacterValue v = chi(k);
    if (v.is_zero()) continue;
    // |1 + zeta_f^k| = 2 |cos(pi k / f)|, never zero at units since f | 2k fails
    s += std::conj(v.to_complex()) *
         std::log(2.0 * std::abs(std::cos(std::numbers::pi * static_cast<double>(k) / f)));
  }
  return tau * s / static_cast<double>(f);
}

SeriesResult l_e_one_series(const DirichletCharacter& chi, double tolerance,
                            std::int64_t term_budget) {
  const std::int64_t m = chi.modulus();
  if (chi.is_principal() && m % 2 == 0)
    throw std::invalid_argument(
        "l_e_one_series: the alternating series diverges for the principal "
        "character of even modulus");
  const std::int64_t period = std::lcm<std::int64_t>(2, m);
  std::vector<std::complex<double>> cycle;
  cycle.reserve(static_cast<std::size_t>(period));
  for (std::int64_t n = 1; n <= period; ++n) {
    const std::complex<double> c = chi(n).to_complex();
    cycle.push_back(n % 2 == 1 ? c : -c);
  }
  return accelerated_periodic_sum(cycle, tolerance, term_budget);
}

SeriesResult l_one_series(const DirichletCharacter& chi, double tolerance,
                          std::int64_t term_budget) {
  if (chi.is_principal())
    throw std::invalid_argument("l_one_series: character must be non-principal");
  const CharacterValue at2 = chi(2);
  if (at2.is_zero() || at2.angle().num() != 0) {
    const std::complex<double> factor = euler_factor_two(chi);
    const double mag = std::abs(factor);
    SeriesResult r = l_e_one_series(chi, tolerance * mag, term_budget);
    r.value /= factor;
    r.error_estimate /= mag;
    return r;
  }
  // chi(2) == 1: the Euler factor vanishes; block-sum the plain series, whose
  // whole-period partial sums again have a pure power-series tail
  const std::int64_t m = chi.modulus();
  std::vector<std::complex<double>> cycle;
  cycle.reserve(static_cast<std::size_t>(m));
  for (std::int64_t n = 1; n <= m; ++n) cycle.push_back(chi(n).to_complex());
  return accelerated_periodic_sum(cycle, tolerance, term_budget);
}

}  // namespace cyclo
