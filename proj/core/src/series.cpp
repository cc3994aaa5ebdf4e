#include "cyclo/series.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <vector>

namespace cyclo {

namespace {

using cld = std::complex<long double>;

}  // namespace

SeriesResult accelerated_periodic_sum(std::span<const std::complex<double>> cycle,
                                      double tolerance, std::int64_t term_budget) {
  const std::int64_t period = static_cast<std::int64_t>(cycle.size());
  if (period == 0) throw std::invalid_argument("accelerated_periodic_sum: empty cycle");
  if (!(tolerance > 0.0))
    throw std::invalid_argument("accelerated_periodic_sum: tolerance must be positive");

  std::vector<cld> coeff(cycle.begin(), cycle.end());
  cld cycle_sum = 0;
  long double scale = 0;
  for (const cld& c : coeff) {
    cycle_sum += c;
    scale = std::max(scale, std::abs(c));
  }
  if (std::abs(cycle_sum) > 1e-9 * std::max<long double>(scale, 1))
    throw std::invalid_argument(
        "accelerated_periodic_sum: cycle sum is nonzero, the series diverges");

  // Refinements live at block counts Q = 64 * 2^k; certifying needs two.
  constexpr std::int64_t q0 = 64;
  const std::int64_t max_blocks = term_budget / period;
  if (max_blocks < 2 * q0)
    throw ConvergenceError("accelerated_periodic_sum: term budget below one working window");

  cld running = 0;
  std::int64_t next_n = 1;
  auto extend_to = [&](std::int64_t blocks) {
    for (; next_n <= blocks * period; ++next_n)
      running += coeff[static_cast<std::size_t>((next_n - 1) % period)] /
                 static_cast<long double>(next_n);
  };

  // Fixed-ratio Richardson on the doubling subsequence: with
  // T[k][0] = U_{Q 2^k} and T[k][t] = (2^t T[k][t-1] - T[k-1][t-1]) / (2^t - 1)
  // each column removes one power of 1/Q and every coefficient stays O(1), so
  // rounding noise is never amplified.  `row` holds T[k-1][0..k-1].
  const long double noise_floor = 64 * LDBL_EPSILON * std::max<long double>(scale, 1);
  std::vector<cld> row;
  cld prev_corner = 0;
  for (std::int64_t q = q0; q <= max_blocks; q *= 2) {
    extend_to(q);
    std::vector<cld> next{running};
    long double weight = 1;
    for (std::size_t t = 1; t <= row.size(); ++t) {
      weight *= 2;
      next.push_back((weight * next[t - 1] - row[t - 1]) / (weight - 1));
    }
    const cld corner = next.back();
    if (!row.empty()) {
      // The previous diagonal entry is one refinement behind, so the gap
      // between corners bounds its error and over-covers the new one.
      const long double est = 2 * std::abs(corner - prev_corner) + noise_floor;
      if (est <= tolerance) {
        return {std::complex<double>(static_cast<double>(corner.real()),
                                     static_cast<double>(corner.imag())),
                static_cast<double>(est), q * period};
      }
    }
    prev_corner = corner;
    row = std::move(next);
  }
  throw ConvergenceError("accelerated_periodic_sum: tolerance not reached within budget");
}

}  // namespace cyclo
