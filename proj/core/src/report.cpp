#include "cyclo/report.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cyclo/dedekind.hpp"
#include "cyclo/lfunction.hpp"
#include "cyclo/modular.hpp"

namespace cyclo {

namespace {

VerificationRecord make(std::int64_t m, std::string check, CheckStatus status,
                        double residual, std::string details) {
  VerificationRecord r;
  r.modulus = m;
  r.check = std::move(check);
  r.status = status;
  r.residual = residual;
  r.details = std::move(details);
  return r;
}

VerificationRecord gated(std::int64_t m, std::string check, double residual, double tol,
                         std::string details) {
  return make(m, std::move(check), residual <= tol ? CheckStatus::pass : CheckStatus::fail,
              residual, std::move(details));
}

VerificationRecord check_orthogonality(std::int64_t m,
                                       const std::vector<DirichletCharacter>& chars,
                                       const Tolerances& tol) {
  double worst = 0.0;
  for (const auto& chi : chars) {
    if (chi.is_principal()) continue;
    std::complex<double> s = 0.0;
    for (std::int64_t r = 1; r <= m; ++r) s += chi(r).to_complex();
    worst = std::max(worst, std::abs(s));
  }
  return gated(m, "orthogonality", worst, tol.orthogonality,
               "max |sum chi(r)| over non-principal characters");
}

VerificationRecord check_gauss(std::int64_t m,
                               const std::vector<DirichletCharacter>& chars,
                               const Tolerances& tol) {
  double worst = 0.0;
  for (const auto& chi : chars) {
    const DirichletCharacter prim = chi.primitive();
    const std::complex<double> tau = gauss_sum(prim);
    const double f = static_cast<double>(prim.modulus());
    worst = std::max(worst, std::abs(std::norm(tau) - f));
  }
  return gated(m, "gauss-magnitude", worst, tol.gauss,
               "max | |tau|^2 - f | over induced primitive characters");
}

VerificationRecord check_closed_vs_series(std::int64_t m,
                                          const std::vector<DirichletCharacter>& chars,
                                          const Tolerances& tol) {
  double worst = 0.0;
  int compared = 0;
  try {
    for (const auto& chi : chars) {
      if (chi.is_principal()) continue;
      const DirichletCharacter prim = chi.primitive();
      const std::complex<double> l_closed = l_one_closed(prim);
      const std::complex<double> le_closed = l_e_one_closed(prim);
      const SeriesResult l_series = l_one_series(prim, tol.series_engine);
      const SeriesResult le_series = l_e_one_series(prim, tol.series_engine);
      worst = std::max({worst, std::abs(l_closed - l_series.value),
                        std::abs(le_closed - le_series.value)});
      ++compared;
    }
  } catch (const ConvergenceError& e) {
    // finite sentinel: infinities do not survive JSON round-trips
    return make(m, "closed-vs-series", CheckStatus::fail, 1e300, e.what());
  }
  return gated(m, "closed-vs-series", worst, tol.series,
               "max closed-form vs series gap over " + std::to_string(compared) +
                   " primitive characters, both L and L_E");
}

VerificationRecord check_euler_factor(std::int64_t m,
                                      const std::vector<DirichletCharacter>& chars,
                                      const Tolerances& tol) {
  double worst = 0.0;
  for (const auto& chi : chars) {
    if (chi.is_principal()) continue;
    const DirichletCharacter prim = chi.primitive();
    const std::complex<double> gap =
        l_e_one_closed(prim) - euler_factor_two(prim) * l_one_closed(prim);
    worst = std::max(worst, std::abs(gap));
  }
  return gated(m, "euler-factor", worst, tol.euler,
               "max |L_E(1) - (1 - chi(2)) L(1)| over primitive characters");
}

VerificationRecord check_dedekind(std::int64_t m, const Tolerances& tol) {
  const std::size_t order = half_group(m).size();
  if (order > 24)
    return make(m, "dedekind", CheckStatus::skipped, 0.0,
                "skipped: group order exceeds the size bound");
  std::mt19937_64 rng(0x9E3779B97F4A7C15ull ^ static_cast<std::uint64_t>(m));
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  double worst = 0.0;
  constexpr int trials = 5;
  for (int t = 0; t < trials; ++t) {
    std::vector<std::complex<double>> f(order);
    for (auto& v : f) v = {coord(rng), coord(rng)};
    worst = std::max(worst, dedekind_det_check(m, f).residual);
  }
  return gated(m, "dedekind", worst, tol.det,
               "max determinant-identity residual over " + std::to_string(trials) +
                   " random functions");
}

VerificationRecord check_descent(std::int64_t m,
                                 const std::vector<DirichletCharacter>& chars,
                                 const Tolerances& tol) {
  if (!is_prime_power(m))
    return make(m, "descent", CheckStatus::skipped, 0.0, "skipped: not a prime power");
  double worst = 0.0;
  int count = 0;
  for (const auto& chi : chars) {
    if (chi.is_principal() || !chi.is_even() || chi.is_primitive()) continue;
    const DescentCheck dc = conductor_descent_check(m, chi);
    worst = std::max(worst, dc.residual);
    ++count;
  }
  if (count == 0)
    return make(m, "descent", CheckStatus::skipped, 0.0,
                "skipped: no imprimitive even characters");
  return gated(m, "descent", worst, tol.descent,
               "max residual against the predicted sign over " + std::to_string(count) +
                   " imprimitive even characters");
}

VerificationRecord check_ratio(std::int64_t m, const Tolerances& tol) {
  if (!is_prime_power(m))
    return make(m, "ratio", CheckStatus::skipped, 0.0, "skipped: not a prime power");
  const RegulatorReport rep =
      verify_index_relation(m, tol.precision, tol.singular_coefficient);
  if (rep.singular) {
    const bool ok = rep.eta_abs <= tol.eta_zero && rep.r_plus <= tol.singular_regulator;
    return make(m, "ratio", ok ? CheckStatus::pass : CheckStatus::fail, rep.r_plus,
                "singular branch: |eta| = " + std::to_string(rep.eta_abs) +
                    ", R~ treated as numerically zero");
  }
  return gated(m, "ratio", rep.residual, tol.ratio_rel,
               "relative gap of R~/R against |eta| = " + std::to_string(rep.eta_abs));
}

VerificationRecord check_conductor_discriminant(
    std::int64_t m, const std::vector<DirichletCharacter>& chars, const Tolerances& tol) {
  std::complex<double> prod = 1.0;
  double conductor_product = 1.0;
  int count = 0;
  for (const auto& chi : chars) {
    if (!chi.is_even()) continue;
    const DirichletCharacter prim = chi.primitive();
    prod *= gauss_sum(prim);
    conductor_product *= static_cast<double>(prim.modulus());
    ++count;
  }
  const double target = std::sqrt(conductor_product);
  const double residual = std::abs(prod - target) / target;
  return gated(m, "conductor-discriminant", residual, tol.conductor_disc,
               "prod tau over " + std::to_string(count) +
                   " even characters vs sqrt(prod conductor)");
}

}  // namespace

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "unknown";
}

std::string to_json_line(const VerificationRecord& record) {
  const nlohmann::json j = {{"check", record.check},
                            {"details", record.details},
                            {"modulus", record.modulus},
                            {"residual", record.residual},
                            {"status", to_string(record.status)}};
  return j.dump();
}

VerificationRecord from_json_line(const std::string& line) {
  const nlohmann::json j = nlohmann::json::parse(line);
  VerificationRecord r;
  r.modulus = j.at("modulus").get<std::int64_t>();
  r.check = j.at("check").get<std::string>();
  r.residual = j.at("residual").get<double>();
  r.details = j.at("details").get<std::string>();
  const std::string status = j.at("status").get<std::string>();
  if (status == "pass")
    r.status = CheckStatus::pass;
  else if (status == "fail")
    r.status = CheckStatus::fail;
  else if (status == "skipped")
    r.status = CheckStatus::skipped;
  else
    throw std::invalid_argument("from_json_line: unknown status " + status);
  return r;
}

std::string csv_header() { return "modulus,check,status,residual,details"; }

std::string to_csv_line(const VerificationRecord& record) {
  std::ostringstream out;
  out.precision(17);
  std::string details = record.details;
  // RFC 4180 quoting: the free-text field is always quoted
  std::string quoted = "\"";
  for (const char c : details) {
    quoted += c;
    if (c == '"') quoted += '"';
  }
  quoted += '"';
  out << record.modulus << ',' << record.check << ',' << to_string(record.status) << ','
      << record.residual << ',' << quoted;
  return out.str();
}

std::vector<VerificationRecord> run_checks(std::int64_t m, const Tolerances& tol) {
  if (m < 3) throw std::invalid_argument("run_checks: modulus must be >= 3");
  static const char* const names[] = {
      "closed-vs-series", "conductor-discriminant", "dedekind",      "descent",
      "euler-factor",     "gauss-magnitude",        "orthogonality", "ratio"};
  std::vector<VerificationRecord> out;
  if (m % 4 == 2) {
    for (const char* name : names)
      out.push_back(make(m, name, CheckStatus::skipped, 0.0,
                         "skipped: m == 2 (mod 4) names the same field as its odd half"));
    return out;
  }
  const std::vector<DirichletCharacter> chars = character_group(m);
  out.push_back(check_closed_vs_series(m, chars, tol));
  out.push_back(check_conductor_discriminant(m, chars, tol));
  out.push_back(check_dedekind(m, tol));
  out.push_back(check_descent(m, chars, tol));
  out.push_back(check_euler_factor(m, chars, tol));
  out.push_back(check_gauss(m, chars, tol));
  out.push_back(check_orthogonality(m, chars, tol));
  out.push_back(check_ratio(m, tol));
  return out;
}

}  // namespace cyclo
