#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace cyclo {

struct SeriesResult {
  std::complex<double> value;
  double error_estimate = 0.0;  // <= the requested tolerance on success
  std::int64_t terms_used = 0;
};

// The requested tolerance could not be certified within the term budget.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Sums sum_{n>=1} cycle[(n-1) mod P] / n for a periodic coefficient cycle of
// period P = cycle.size() with zero cycle sum (otherwise the series diverges
// and the call is rejected).
//
// Strategy: partial sums taken only at whole-period boundaries n = QP carry a
// plain power-series error in 1/Q (the oscillatory part of the tail cancels on
// that subsequence), so iterated Richardson averaging of the block partial
// sums gains one power of 1/Q per pass.  Internals run in long double; the
// error estimate is the observed plateau of the extrapolation tableau plus a
// rounding floor.
SeriesResult accelerated_periodic_sum(std::span<const std::complex<double>> cycle,
                                      double tolerance,
                                      std::int64_t term_budget = 1'000'000);

}  // namespace cyclo
