#pragma once

#include <complex>
#include <cstdint>

#include "cyclo/character.hpp"
#include "cyclo/series.hpp"

namespace cyclo {

// tau(chi) = sum_r chi(r) zeta_f^r with zeta_f = e^{2 pi i / f} in the fixed
// complex embedding.  Requires chi primitive; tau of the modulus-1 character
// is 1.
std::complex<double> gauss_sum(const DirichletCharacter& chi);

// 1 - chi(2); equals 1 when the modulus is even.  Links the alternating and
// plain series: L_E(1, chi) = (1 - chi(2)) L(1, chi).
std::complex<double> euler_factor_two(const DirichletCharacter& chi);

// L(1, chi) by the finite closed form (log-sine sum for even chi, weighted
// residue sum for odd chi).  Requires chi primitive and non-principal.
std::complex<double> l_one_closed(const DirichletCharacter& chi);

// L_E(1, chi) = sum_{n>=1} (-1)^(n-1) chi(n)/n by the finite closed form
// (log-cosine sum for even chi).  Requires chi primitive and non-principal.
std::complex<double> l_e_one_closed(const DirichletCharacter& chi);

// The equivalent full-range form of the even case, summing
// chi~(k) log|1 + zeta_f^k| over a complete residue system.  Kept separate as
// an independent algebraic route for consistency checks.  Requires chi
// primitive, even, non-principal.
std::complex<double> l_e_one_closed_full_range(const DirichletCharacter& chi);

// Series evaluation of L_E(1, chi) for any chi mod m whose alternating series
// converges (every chi except the principal one of even modulus, which is
// rejected).  The result's error estimate is at most `tolerance`.
SeriesResult l_e_one_series(const DirichletCharacter& chi, double tolerance,
                            std::int64_t term_budget = 1'000'000);

// Series evaluation of L(1, chi) for non-principal chi: through the
// alternating series and the Euler factor when chi(2) != 1, by whole-period
// block summation of the plain series when chi(2) == 1.
SeriesResult l_one_series(const DirichletCharacter& chi, double tolerance,
                          std::int64_t term_budget = 1'000'000);

}  // namespace cyclo
