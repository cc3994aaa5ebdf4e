#include "cyclo/regulator.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "cyclo/linalg.hpp"
#include "cyclo/modular.hpp"
#include "cyclo/unit_group.hpp"

namespace cyclo {

namespace {

using mp50 = boost::multiprecision::cpp_bin_float_50;

void require_regulator_modulus(std::int64_t m, const char* who) {
  if (m < 3) throw std::invalid_argument(std::string(who) + ": modulus must be >= 3");
  if (m % 4 == 2)
    throw std::invalid_argument(std::string(who) + ": modulus 2 mod 4 names the same field "
                                                   "as its odd half; use that modulus");
}

template <class Real>
Real pi_value();

template <>
double pi_value<double>() {
  return std::numbers::pi;
}

template <>
mp50 pi_value<mp50>() {
  return boost::math::constants::pi<mp50>();
}

// log|1 - zeta_m^t| = log(2 sin(pi t/m)),  log|1 + zeta_m^t| = log(2|cos(pi t/m)|)
template <class Real>
Real log_base_unit(std::int64_t m, std::int64_t t, UnitKind kind) {
  using std::abs;
  using std::cos;
  using std::log;
  using std::sin;
  std::int64_t r = t % m;
  if (r < 0) r += m;
  const Real angle = pi_value<Real>() * Real(r) / Real(m);
  const Real h = kind == UnitKind::classic ? Real(2) * sin(angle) : Real(2) * abs(cos(angle));
  return log(h);
}

template <class Real>
std::vector<Real> build_entries(std::int64_t m, UnitKind kind,
                                const std::vector<std::int64_t>& labels) {
  std::vector<Real> entries;
  entries.reserve(labels.size() * labels.size());
  for (const std::int64_t a : labels)
    for (const std::int64_t k : labels)
      entries.push_back(log_base_unit<Real>(m, a * k, kind) -
                        log_base_unit<Real>(m, a, kind));
  return entries;
}

std::vector<std::int64_t> regulator_labels(std::int64_t m) {
  std::vector<std::int64_t> labels = half_group(m);
  labels.erase(labels.begin());  // drop the identity representative
  return labels;
}

template <class Real>
double regulator_det(std::int64_t m, UnitKind kind) {
  const auto labels = regulator_labels(m);
  if (labels.empty()) return 1.0;
  auto entries = build_entries<Real>(m, kind, labels);
  using std::abs;
  const Real det = determinant(std::move(entries), labels.size());
  return static_cast<double>(abs(det));
}

// sum over half_group(level) of chi(k) log|1 -/+ zeta_level^k|
std::complex<double> character_log_sum(const DirichletCharacter& chi, std::int64_t level,
                                       UnitKind kind) {
  std::complex<double> s = 0.0;
  for (const std::int64_t k : half_group(level))
    s += chi(k).to_complex() * log_base_unit<double>(level, k, kind);
  return s;
}

}  // namespace

double log_unit(std::int64_t m, std::int64_t a, std::int64_t k, UnitKind kind) {
  require_regulator_modulus(m, "log_unit");
  if (std::gcd(a, m) != 1 || std::gcd(k, m) != 1)
    throw std::invalid_argument("log_unit: indices must be coprime to the modulus");
  return log_base_unit<double>(m, a * k, kind) - log_base_unit<double>(m, a, kind);
}

LogEmbeddingMatrix log_embedding_matrix(std::int64_t m, UnitKind kind) {
  require_regulator_modulus(m, "log_embedding_matrix");
  LogEmbeddingMatrix out;
  out.modulus = m;
  out.kind = kind;
  out.labels = regulator_labels(m);
  out.entries = build_entries<double>(m, kind, out.labels);
  return out;
}

double regulator(std::int64_t m, UnitKind kind, Precision precision) {
  require_regulator_modulus(m, "regulator");
  return precision == Precision::standard ? regulator_det<double>(m, kind)
                                          : regulator_det<mp50>(m, kind);
}

double regulator_via_characters(std::int64_t m, UnitKind kind) {
  require_regulator_modulus(m, "regulator_via_characters");
  std::complex<double> prod = 1.0;
  for (const auto& chi : even_nontrivial(m)) prod *= character_log_sum(chi, m, kind);
  return std::abs(prod);
}

std::complex<double> eta_factor(std::int64_t m) {
  require_regulator_modulus(m, "eta_factor");
  std::complex<double> prod = 1.0;
  for (const auto& chi : even_nontrivial(m))
    prod *= std::complex<double>(1.0, 0.0) - chi(2).to_complex();
  return prod;
}

double singularity_threshold(std::int64_t m, UnitKind kind, double coefficient) {
  require_regulator_modulus(m, "singularity_threshold");
  const auto labels = regulator_labels(m);
  if (labels.empty()) return coefficient;
  const auto entries = build_entries<double>(m, kind, labels);
  return coefficient * hadamard_bound(entries, labels.size());
}

DescentCheck conductor_descent_check(std::int64_t m, const DirichletCharacter& chi) {
  require_regulator_modulus(m, "conductor_descent_check");
  if (!is_prime_power(m))
    throw std::invalid_argument("conductor_descent_check: modulus must be a prime power");
  if (chi.modulus() != m)
    throw std::invalid_argument("conductor_descent_check: character modulus mismatch");
  if (chi.is_principal() || !chi.is_even())
    throw std::invalid_argument("conductor_descent_check: character must be even and "
                                "non-principal");
  const std::int64_t f = chi.conductor();
  if (f == m)
    throw std::invalid_argument("conductor_descent_check: character is primitive; descent "
                                "relates distinct levels only");

  const DirichletCharacter prim = chi.primitive();
  DescentCheck out;
  out.modulus = m;
  out.conductor = f;
  out.modulus_sum = character_log_sum(chi, m, UnitKind::plus);
  out.conductor_sum_plus = character_log_sum(prim, f, UnitKind::plus);
  out.conductor_sum_minus = character_log_sum(prim, f, UnitKind::classic);
  out.predicted_sign = m % 2 == 0 ? -1 : 1;
  const double d_plus = std::abs(out.modulus_sum - out.conductor_sum_plus);
  const double d_minus = std::abs(out.modulus_sum - out.conductor_sum_minus);
  out.empirical_sign = d_plus <= d_minus ? 1 : -1;
  out.residual = out.predicted_sign == 1 ? d_plus : d_minus;
  return out;
}

RegulatorReport verify_index_relation(std::int64_t m, Precision precision,
                                      double singular_coefficient) {
  require_regulator_modulus(m, "verify_index_relation");
  if (!is_prime_power(m))
    throw std::invalid_argument("verify_index_relation: modulus must be a prime power");

  RegulatorReport out;
  out.modulus = m;
  out.r_classic = regulator(m, UnitKind::classic, precision);
  out.r_plus = regulator(m, UnitKind::plus, precision);
  out.eta = eta_factor(m);
  out.eta_abs = std::abs(out.eta);
  out.minus_one_two = m % 2 == 0 ? true : minus_one_two_generate(m);
  out.singular =
      out.r_plus < singularity_threshold(m, UnitKind::plus, singular_coefficient);
  if (out.singular) {
    out.residual = out.r_plus;
  } else {
    out.ratio = out.r_plus / out.r_classic;
    out.residual = std::abs(*out.ratio - out.eta_abs) / out.eta_abs;
  }
  return out;
}

ClassNumberCheck h_plus_formula_check(std::int64_t m, double r_plus) {
  require_regulator_modulus(m, "h_plus_formula_check");
  if (!(r_plus > 0.0))
    throw std::invalid_argument("h_plus_formula_check: r_plus must be positive");

  std::complex<double> classic_prod = 1.0;
  std::complex<double> plus_prod = 1.0;
  for (const auto& chi : even_nontrivial(m)) {
    const DirichletCharacter prim = chi.primitive();
    const std::int64_t f = prim.modulus();
    classic_prod *= -character_log_sum(prim, f, UnitKind::classic);
    plus_prod *= character_log_sum(prim, f, UnitKind::plus);
  }

  ClassNumberCheck out;
  out.classic_product = std::abs(classic_prod);
  out.plus_product = std::abs(plus_prod);
  out.h_plus_classic = out.classic_product / r_plus;
  out.h_plus_times_eta = out.plus_product / r_plus;
  out.imag_residual = std::max(std::abs(classic_prod.imag()), std::abs(plus_prod.imag()));
  return out;
}

}  // namespace cyclo
