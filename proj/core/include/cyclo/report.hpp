#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclo/regulator.hpp"

namespace cyclo {

// Gates for the verification battery.  `series` and `det` are the two
// user-adjustable knobs; the rest are pinned per-check constants.
struct Tolerances {
  double series = 1e-6;         // closed form vs series agreement
  double series_engine = 1e-8;  // tolerance requested from the series engine
  double det = 1e-8;            // determinant identities (dedekind)
  double orthogonality = 1e-12;
  double gauss = 1e-9;          // | |tau|^2 - f |
  double euler = 1e-10;         // L_E = (1 - chi(2)) L, closed forms
  double descent = 1e-9;
  double ratio_rel = 1e-6;           // relative gate on R~/R = |eta|
  double eta_zero = 1e-12;           // |eta| gate in the singular branch
  double singular_regulator = 1e-8;  // absolute gate on R~ in the singular branch
  double singular_coefficient = 1e-8;  // scales the Hadamard singularity threshold
  double conductor_disc = 1e-8;        // relative gate on prod tau = sqrt(prod f)
  Precision precision = Precision::standard;
};

enum class CheckStatus { pass, fail, skipped };

const char* to_string(CheckStatus status);

struct VerificationRecord {
  std::int64_t modulus = 0;
  std::string check;
  CheckStatus status = CheckStatus::skipped;
  double residual = 0.0;
  std::string details;
};

// One line of minified JSON with the fields (check, details, modulus,
// residual, status); parse/serialize round-trips byte-identically.
std::string to_json_line(const VerificationRecord& record);
VerificationRecord from_json_line(const std::string& line);

std::string csv_header();
std::string to_csv_line(const VerificationRecord& record);

// The verification battery for one modulus, one record per check, sorted by
// check name.  For m == 2 (mod 4) every check is reported as skipped; checks
// that do not apply to a particular m (ratio/descent off prime powers, oversize
// dedekind groups) are individually skipped with the reason in `details`.
// Requires m >= 3.
std::vector<VerificationRecord> run_checks(std::int64_t m, const Tolerances& tol = {});

}  // namespace cyclo
