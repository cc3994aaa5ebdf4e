#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "cyclo/character.hpp"

namespace cyclo {

// The two families of cyclotomic units: (zeta^k - 1)/(zeta - 1) and
// (zeta^k + 1)/(zeta + 1).
enum class UnitKind {
  classic,  // built on 1 - zeta
  plus,     // built on 1 + zeta
};

enum class Precision {
  standard,  // double
  extended,  // ~50 significant digits
};

// log of the absolute value of the sigma_a-embedding of the kind's unit g_k:
//   classic: log|1 - zeta_m^(ak)| - log|1 - zeta_m^a|
//   plus:    log|1 + zeta_m^(ak)| - log|1 + zeta_m^a|
// Requires m >= 3, m != 2 (mod 4), gcd(a, m) = gcd(k, m) = 1.
double log_unit(std::int64_t m, std::int64_t a, std::int64_t k, UnitKind kind);

// Square log-embedding matrix: rows are automorphisms a, columns units g_k,
// both running over half_group(m) with 1 removed.  Empty for m = 3, 4.
struct LogEmbeddingMatrix {
  std::int64_t modulus = 0;
  UnitKind kind = UnitKind::classic;
  std::vector<std::int64_t> labels;  // half-group representatives except 1
  std::vector<double> entries;       // dim() x dim(), row-major
  std::size_t dim() const { return labels.size(); }
};

LogEmbeddingMatrix log_embedding_matrix(std::int64_t m, UnitKind kind);

// |det| of the log-embedding matrix; 1 by convention for the empty matrix.
// Requires m >= 3, m != 2 (mod 4).
double regulator(std::int64_t m, UnitKind kind, Precision precision = Precision::standard);

// The same quantity through the character factorization of the group
// determinant: |prod over even nontrivial chi of sum_{k in half_group(m)}
// chi(k) log|1 -/+ zeta_m^k||.
double regulator_via_characters(std::int64_t m, UnitKind kind);

// eta = prod over even nontrivial chi mod m of (1 - chi(2)).  Real up to
// rounding; the imaginary part is returned for inspection.  Equals 1 for
// m = 2^n (every factor is 1 - 0).
std::complex<double> eta_factor(std::int64_t m);

// Hadamard bound of the kind's log-embedding matrix (1 for the empty matrix);
// |det| below coefficient * bound is treated as a numerical zero.
double singularity_threshold(std::int64_t m, UnitKind kind, double coefficient = 1e-8);

// Descent of the plus-kind character sum from level m = p^n to the conductor
// f = p^s < m of an imprimitive even chi.  The fiber norm of 1 + zeta_m^c is
// 1 + sign * zeta_f^k with sign = -1 exactly for p = 2, so the level-m plus
// sum equals the conductor-level plus sum (p odd) or classic sum (p = 2).
struct DescentCheck {
  std::int64_t modulus = 0;
  std::int64_t conductor = 0;
  std::complex<double> modulus_sum;          // plus-kind sum at level m
  std::complex<double> conductor_sum_plus;   // plus-kind sum at level f
  std::complex<double> conductor_sum_minus;  // classic-kind sum at level f
  int predicted_sign = 1;                    // -1 iff p = 2
  int empirical_sign = 1;                    // target the modulus sum actually matches
  double residual = 0.0;                     // distance to the predicted target
  bool sign_matches() const { return predicted_sign == empirical_sign; }
};

// Requires m a prime power (not 2 mod 4) and chi an even non-principal
// character mod m with conductor(chi) < m.
DescentCheck conductor_descent_check(std::int64_t m, const DirichletCharacter& chi);

// Numerical verification of R~ / R = |eta| for prime-power m.
struct RegulatorReport {
  std::int64_t modulus = 0;
  double r_classic = 0.0;
  double r_plus = 0.0;
  std::complex<double> eta;
  double eta_abs = 0.0;
  bool minus_one_two = false;  // <-1, 2> generates (Z/m)*; true for m = 2^n
  bool singular = false;       // r_plus below the singularity threshold
  std::optional<double> ratio;  // r_plus / r_classic when nonsingular
  double residual = 0.0;  // relative |ratio - |eta|| / |eta|, or r_plus when singular
};

// Requires m >= 3 a prime power, m != 2 (mod 4); m = 3, 4 give the trivial
// report (empty matrices, ratio 1, eta 1).
RegulatorReport verify_index_relation(std::int64_t m,
                                      Precision precision = Precision::standard,
                                      double singular_coefficient = 1e-8);

// Conductor-level character-sum products divided by a supplied plus-part
// regulator: classic_product / r_plus recovers the plus-part class number
// h+, and plus_product / r_plus recovers |eta| * h+.
struct ClassNumberCheck {
  double classic_product = 0.0;   // |prod_chi sum_{G_chi} -chi(k) log|1 - zeta_f^k||
  double plus_product = 0.0;      // |prod_chi sum_{G_chi} chi(k) log|1 + zeta_f^k||
  double h_plus_classic = 0.0;    // classic_product / r_plus
  double h_plus_times_eta = 0.0;  // plus_product / r_plus
  double imag_residual = 0.0;     // largest |Im| seen in either product
};

// Requires m >= 3, m != 2 (mod 4), r_plus > 0.
ClassNumberCheck h_plus_formula_check(std::int64_t m, double r_plus);

}  // namespace cyclo
