// cyclo: special values of Dirichlet L-series and cyclotomic-unit regulators.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclo/character.hpp"
#include "cyclo/lfunction.hpp"
#include "cyclo/modular.hpp"
#include "cyclo/dedekind.hpp"
#include "cyclo/regulator.hpp"
#include "cyclo/report.hpp"

namespace {

enum class Format { text, json, csv };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt_double(double x) {
  std::ostringstream out;
  out << std::setprecision(12) << x;
  return out.str();
}

std::string fmt_complex(std::complex<double> z) {
  std::ostringstream out;
  out << std::setprecision(12) << z.real();
  if (z.imag() != 0.0)
    out << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return out.str();
}

nlohmann::json json_complex(std::complex<double> z) {
  return {{"im", z.imag()}, {"re", z.real()}};
}

std::string csv_escape(const std::string& s) {
  std::string out = "\"";
  for (const char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

// chi(2) rendered exactly: 0, 1, -1, or e(num/den) for e^{2 pi i num/den}
std::string fmt_value(const cyclo::CharacterValue& v) {
  if (v.is_zero()) return "0";
  const auto& a = v.angle();
  if (a.num() == 0) return "1";
  if (a.den() == 2) return "-1";
  return "e(" + std::to_string(a.num()) + "/" + std::to_string(a.den()) + ")";
}

std::vector<std::int64_t> parse_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos)
    throw UsageError("--range wants the form a..b, got '" + text + "'");
  std::int64_t lo = 0, hi = 0;
  try {
    std::size_t used = 0;
    lo = std::stoll(text.substr(0, pos), &used);
    if (used != pos) throw std::invalid_argument("");
    const std::string tail = text.substr(pos + 2);
    hi = std::stoll(tail, &used);
    if (used != tail.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw UsageError("--range wants integer endpoints, got '" + text + "'");
  }
  if (lo > hi) throw UsageError("--range endpoints out of order");
  std::vector<std::int64_t> out;
  for (std::int64_t m = lo; m <= hi; ++m) out.push_back(m);
  return out;
}

// Explicit moduli must be individually valid; range entries are filtered.
std::vector<std::int64_t> collect_moduli(const std::vector<std::int64_t>& listed,
                                         const std::string& range, bool allow_2mod4) {
  std::set<std::int64_t> moduli;
  for (const std::int64_t m : listed) {
    if (m < 3) throw UsageError("modulus must be >= 3, got " + std::to_string(m));
    if (!allow_2mod4 && m % 4 == 2)
      throw UsageError("modulus " + std::to_string(m) +
                       " == 2 (mod 4) names the same field as its odd half");
    moduli.insert(m);
  }
  if (!range.empty())
    for (const std::int64_t m : parse_range(range)) {
      if (m < 3) continue;
      if (!allow_2mod4 && m % 4 == 2) continue;
      moduli.insert(m);
    }
  if (moduli.empty()) throw UsageError("no moduli given (pass m or --range a..b)");
  return {moduli.begin(), moduli.end()};
}

int cmd_characters(std::int64_t m, Format format) {
  if (m < 3) throw UsageError("modulus must be >= 3, got " + std::to_string(m));
  const auto chars = cyclo::character_group(m);
  if (format == Format::text) {
    std::cout << std::left << std::setw(16) << "label" << std::setw(8) << "parity"
              << std::setw(11) << "conductor" << "chi(2)\n";
    for (const auto& chi : chars)
      std::cout << std::left << std::setw(16) << chi.label() << std::setw(8)
                << (chi.is_even() ? "even" : "odd") << std::setw(11) << chi.conductor()
                << fmt_value(chi(2)) << "\n";
  } else if (format == Format::csv) {
    std::cout << "label,parity,conductor,chi2\n";
    for (const auto& chi : chars)
      std::cout << csv_escape(chi.label()) << ',' << (chi.is_even() ? "even" : "odd")
                << ',' << chi.conductor() << ',' << csv_escape(fmt_value(chi(2))) << "\n";
  } else {
    for (const auto& chi : chars) {
      const cyclo::CharacterValue v = chi(2);
      nlohmann::json j = {{"chi2", fmt_value(v)},
                          {"conductor", chi.conductor()},
                          {"label", chi.label()},
                          {"parity", chi.is_even() ? "even" : "odd"}};
      std::cout << j.dump() << "\n";
    }
  }
  return 0;
}

int cmd_lvalues(std::int64_t m, const std::string& method, double tolerance,
                Format format) {
  if (m < 3) throw UsageError("modulus must be >= 3, got " + std::to_string(m));
  if (m % 4 == 2)
    throw UsageError("modulus " + std::to_string(m) +
                     " == 2 (mod 4) names the same field as its odd half");
  if (method != "closed" && method != "series" && method != "both")
    throw UsageError("--method must be closed, series, or both");
  const bool want_closed = method != "series";
  const bool want_series = method != "closed";

  struct Row {
    std::string label;
    std::int64_t conductor;
    bool even;
    std::complex<double> l_closed, le_closed, l_series, le_series;
    double series_error = 0.0;
    double gap = 0.0;
    std::string note;
  };
  std::vector<Row> rows;
  bool any_error = false;
  for (const auto& chi : cyclo::character_group(m)) {
    if (chi.is_principal()) continue;
    const cyclo::DirichletCharacter prim = chi.primitive();
    Row row;
    row.label = prim.label();
    row.conductor = prim.modulus();
    row.even = prim.is_even();
    if (want_closed) {
      row.l_closed = cyclo::l_one_closed(prim);
      row.le_closed = cyclo::l_e_one_closed(prim);
    }
    if (want_series) {
      try {
        const cyclo::SeriesResult l = cyclo::l_one_series(prim, tolerance);
        const cyclo::SeriesResult le = cyclo::l_e_one_series(prim, tolerance);
        row.l_series = l.value;
        row.le_series = le.value;
        row.series_error = std::max(l.error_estimate, le.error_estimate);
      } catch (const cyclo::ConvergenceError& e) {
        row.note = e.what();
        any_error = true;
      }
    }
    if (want_closed && want_series && row.note.empty())
      row.gap = std::max(std::abs(row.l_closed - row.l_series),
                         std::abs(row.le_closed - row.le_series));
    rows.push_back(std::move(row));
  }

  if (format == Format::text) {
    std::cout << std::left << std::setw(16) << "label" << std::setw(11) << "conductor"
              << std::setw(8) << "parity";
    if (want_closed) std::cout << std::setw(40) << "L(1)" << std::setw(40) << "L_E(1)";
    if (want_series)
      std::cout << std::setw(40) << "L(1) series" << std::setw(40) << "L_E(1) series"
                << std::setw(19) << "est.err";
    if (want_closed && want_series) std::cout << std::setw(12) << "gap";
    std::cout << "\n";
    for (const Row& r : rows) {
      std::cout << std::left << std::setw(16) << r.label << std::setw(11) << r.conductor
                << std::setw(8) << (r.even ? "even" : "odd");
      if (want_closed)
        std::cout << std::setw(40) << fmt_complex(r.l_closed) << std::setw(40)
                  << fmt_complex(r.le_closed);
      if (want_series) {
        if (r.note.empty())
          std::cout << std::setw(40) << fmt_complex(r.l_series) << std::setw(40)
                    << fmt_complex(r.le_series) << std::setw(19)
                    << fmt_double(r.series_error);
        else
          std::cout << "error: " << r.note;
      }
      if (want_closed && want_series && r.note.empty())
        std::cout << fmt_double(r.gap);
      std::cout << "\n";
    }
  } else if (format == Format::csv) {
    std::cout << "label,conductor,parity,l_re,l_im,le_re,le_im,l_series_re,l_series_im,"
                 "le_series_re,le_series_im,series_error,gap,note\n";
    std::cout << std::setprecision(17);
    for (const Row& r : rows)
      std::cout << csv_escape(r.label) << ',' << r.conductor << ','
                << (r.even ? "even" : "odd") << ',' << r.l_closed.real() << ','
                << r.l_closed.imag() << ',' << r.le_closed.real() << ','
                << r.le_closed.imag() << ',' << r.l_series.real() << ','
                << r.l_series.imag() << ',' << r.le_series.real() << ','
                << r.le_series.imag() << ',' << r.series_error << ',' << r.gap << ','
                << csv_escape(r.note) << "\n";
  } else {
    for (const Row& r : rows) {
      nlohmann::json j = {{"conductor", r.conductor},
                          {"label", r.label},
                          {"method", method},
                          {"parity", r.even ? "even" : "odd"}};
      if (want_closed) {
        j["l_closed"] = json_complex(r.l_closed);
        j["le_closed"] = json_complex(r.le_closed);
      }
      if (want_series && r.note.empty()) {
        j["l_series"] = json_complex(r.l_series);
        j["le_series"] = json_complex(r.le_series);
        j["series_error"] = r.series_error;
      }
      if (want_closed && want_series && r.note.empty()) j["gap"] = r.gap;
      if (!r.note.empty()) j["note"] = r.note;
      std::cout << j.dump() << "\n";
    }
  }
  return any_error ? 1 : 0;
}

int cmd_regulators(const std::vector<std::int64_t>& moduli, cyclo::Precision precision,
                   Format format) {
  if (format == Format::text)
    std::cout << std::left << std::setw(6) << "m" << std::setw(18) << "R_classic"
              << std::setw(18) << "R_plus" << std::setw(12) << "|eta|" << std::setw(14)
              << "ratio" << std::setw(10) << "<-1,2>" << std::setw(12) << "residual"
              << "\n";
  else if (format == Format::csv)
    std::cout << "m,r_classic,r_plus,eta_abs,eta_im,ratio,singular,minus_one_two,"
                 "residual,prime_power\n";
  for (const std::int64_t m : moduli) {
    const bool pp = cyclo::is_prime_power(m);
    double r_classic = 0.0, r_plus = 0.0, eta_abs = 0.0, eta_im = 0.0;
    bool singular = false, gen = false;
    std::optional<double> ratio;
    double residual = 0.0;
    if (pp) {
      const cyclo::RegulatorReport rep = cyclo::verify_index_relation(m, precision);
      r_classic = rep.r_classic;
      r_plus = rep.r_plus;
      eta_abs = rep.eta_abs;
      eta_im = rep.eta.imag();
      singular = rep.singular;
      gen = rep.minus_one_two;
      ratio = rep.ratio;
      residual = rep.residual;
    } else {
      // composite level: regulators and eta still make sense, the index
      // relation does not
      r_classic = cyclo::regulator(m, cyclo::UnitKind::classic, precision);
      r_plus = cyclo::regulator(m, cyclo::UnitKind::plus, precision);
      const std::complex<double> eta = cyclo::eta_factor(m);
      eta_abs = std::abs(eta);
      eta_im = eta.imag();
    }
    if (format == Format::text) {
      std::cout << std::left << std::setw(6) << m << std::setw(18)
                << fmt_double(r_classic) << std::setw(18) << fmt_double(r_plus)
                << std::setw(12) << fmt_double(eta_abs) << std::setw(14)
                << (singular ? "singular"
                             : (ratio ? fmt_double(*ratio) : std::string("n/a")))
                << std::setw(10) << (pp ? (gen ? "yes" : "no") : "n/a") << std::setw(12)
                << (pp ? fmt_double(residual) : std::string("n/a")) << "\n";
    } else if (format == Format::csv) {
      std::cout << m << ',' << r_classic << ',' << r_plus << ',' << eta_abs << ','
                << eta_im << ',' << (ratio ? fmt_double(*ratio) : "") << ','
                << (singular ? 1 : 0) << ',' << (gen ? 1 : 0) << ',' << residual << ','
                << (pp ? 1 : 0) << "\n";
    } else {
      nlohmann::json j = {{"eta_abs", eta_abs},
                          {"eta_im", eta_im},
                          {"modulus", m},
                          {"prime_power", pp},
                          {"r_classic", r_classic},
                          {"r_plus", r_plus}};
      if (pp) {
        j["singular"] = singular;
        j["minus_one_two"] = gen;
        j["residual"] = residual;
        if (ratio) j["ratio"] = *ratio;
      }
      std::cout << j.dump() << "\n";
    }
  }
  return 0;
}

int cmd_verify(const std::vector<std::int64_t>& moduli, const cyclo::Tolerances& tol,
               Format format) {
  if (format == Format::text) {
    std::cout << "# tol-series=" << tol.series << " tol-det=" << tol.det
              << " series-engine=" << tol.series_engine << "\n";
    std::cout << std::left << std::setw(6) << "m" << std::setw(24) << "check"
              << std::setw(9) << "status" << std::setw(19) << "residual" << "details\n";
  } else if (format == Format::csv) {
    std::cout << "# tol-series=" << tol.series << " tol-det=" << tol.det << "\n"
              << cyclo::csv_header() << "\n";
  }
  bool any_fail = false;
  for (const std::int64_t m : moduli) {
    for (const cyclo::VerificationRecord& rec : cyclo::run_checks(m, tol)) {
      any_fail = any_fail || rec.status == cyclo::CheckStatus::fail;
      if (format == Format::text)
        std::cout << std::left << std::setw(6) << rec.modulus << std::setw(24)
                  << rec.check << std::setw(9) << cyclo::to_string(rec.status)
                  << std::setw(19) << fmt_double(rec.residual) << rec.details << "\n";
      else if (format == Format::csv)
        std::cout << cyclo::to_csv_line(rec) << "\n";
      else
        std::cout << cyclo::to_json_line(rec) << "\n";
    }
  }
  return any_fail ? 1 : 0;
}

int cmd_dedekind_selftest(int trials, std::uint64_t seed, std::int64_t max_modulus,
                          double tol, Format format) {
  if (max_modulus < 3) throw UsageError("--max-modulus must be >= 3");
  if (trials < 1) throw UsageError("--trials must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick_m(3, max_modulus);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  double worst = 0.0;
  std::int64_t worst_m = 0;
  for (int t = 0; t < trials; ++t) {
    const std::int64_t m = pick_m(rng);
    std::vector<std::complex<double>> f(cyclo::half_group(m).size());
    for (auto& v : f) v = {coord(rng), coord(rng)};
    const double residual = cyclo::dedekind_det_check(m, f).residual;
    if (residual > worst) {
      worst = residual;
      worst_m = m;
    }
  }
  const bool ok = worst <= tol;
  if (format == Format::json) {
    nlohmann::json j = {{"max_modulus", max_modulus}, {"pass", ok},
                        {"seed", seed},              {"tolerance", tol},
                        {"trials", trials},          {"worst_modulus", worst_m},
                        {"worst_residual", worst}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << trials << " random group-determinant trials, m <= " << max_modulus
              << ": worst residual " << fmt_double(worst) << " at m=" << worst_m << " -> "
              << (ok ? "pass" : "fail") << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Special values of Dirichlet L-series, their alternating variants, and "
               "cyclotomic-unit regulators, with built-in cross-verification."};
  app.require_subcommand(1);

  bool json_flag = false, csv_flag = false;
  const auto add_format_flags = [&](CLI::App* sub) {
    sub->add_flag("--json", json_flag, "one JSON object per output row");
    sub->add_flag("--csv", csv_flag, "CSV output");
  };

  auto* c_chars = app.add_subcommand("characters", "list the Dirichlet characters mod m");
  add_format_flags(c_chars);
  std::int64_t chars_m = 0;
  c_chars->add_option("m", chars_m, "modulus (>= 3)")->required();

  auto* c_lvalues = app.add_subcommand(
      "lvalues", "L(1, chi) and L_E(1, chi) for the primitive characters of conductor "
                 "dividing m");
  std::int64_t lvalues_m = 0;
  std::string method = "both";
  double lvalues_tol = 1e-8;
  c_lvalues->add_option("m", lvalues_m, "modulus (>= 3, not 2 mod 4)")->required();
  c_lvalues->add_option("--method", method, "closed | series | both")
      ->default_str("both");
  c_lvalues->add_option("--tol", lvalues_tol, "series tolerance")->default_str("1e-8");

  auto* c_reg = app.add_subcommand("regulators",
                                   "cyclotomic-unit regulators and the index ratio");
  std::vector<std::int64_t> reg_moduli;
  std::string reg_range;
  int reg_digits = 15;
  c_reg->add_option("m", reg_moduli, "moduli");
  c_reg->add_option("--range", reg_range, "inclusive modulus range a..b");
  c_reg->add_option("--precision", reg_digits,
                    "working digits; above 17 switches to extended precision");

  auto* c_verify = app.add_subcommand("verify", "run the verification battery");
  std::vector<std::int64_t> verify_moduli;
  std::string verify_range;
  int verify_digits = 15;
  cyclo::Tolerances tol;
  c_verify->add_option("m", verify_moduli, "moduli");
  c_verify->add_option("--range", verify_range, "inclusive modulus range a..b");
  c_verify->add_option("--tol-series", tol.series, "closed-vs-series gate")
      ->default_str("1e-6");
  c_verify->add_option("--tol-det", tol.det, "determinant-identity gate")
      ->default_str("1e-8");
  c_verify->add_option("--precision", verify_digits,
                       "working digits; above 17 switches to extended precision");

  auto* c_dede = app.add_subcommand("dedekind-selftest",
                                    "randomized group-determinant identity trials");
  int dede_trials = 200;
  std::uint64_t dede_seed = 20260822ull;
  std::int64_t dede_max_m = 20;
  double dede_tol = 1e-8;
  c_dede->add_option("--trials", dede_trials, "number of random trials")
      ->default_str("200");
  c_dede->add_option("--seed", dede_seed, "RNG seed");
  c_dede->add_option("--max-modulus", dede_max_m, "largest modulus drawn")
      ->default_str("20");
  c_dede->add_option("--tol", dede_tol, "residual gate")->default_str("1e-8");

  add_format_flags(c_lvalues);
  add_format_flags(c_reg);
  add_format_flags(c_verify);
  add_format_flags(c_dede);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const Format format =
      json_flag ? Format::json : (csv_flag ? Format::csv : Format::text);

  try {
    if (app.got_subcommand(c_chars)) return cmd_characters(chars_m, format);
    if (app.got_subcommand(c_lvalues))
      return cmd_lvalues(lvalues_m, method, lvalues_tol, format);
    if (app.got_subcommand(c_reg)) {
      const auto moduli = collect_moduli(reg_moduli, reg_range, false);
      const auto precision =
          reg_digits > 17 ? cyclo::Precision::extended : cyclo::Precision::standard;
      return cmd_regulators(moduli, precision, format);
    }
    if (app.got_subcommand(c_verify)) {
      const auto moduli = collect_moduli(verify_moduli, verify_range, true);
      tol.precision =
          verify_digits > 17 ? cyclo::Precision::extended : cyclo::Precision::standard;
      return cmd_verify(moduli, tol, format);
    }
    if (app.got_subcommand(c_dede))
      return cmd_dedekind_selftest(dede_trials, dede_seed, dede_max_m, dede_tol, format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
