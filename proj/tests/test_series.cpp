#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "cyclo/series.hpp"

using cyclo::accelerated_periodic_sum;
using cyclo::ConvergenceError;
using cyclo::SeriesResult;

namespace {

// Partial sum over the first `blocks` whole periods, straight accumulation.
long double block_partial_sum(const std::vector<double>& cycle, std::int64_t blocks) {
  const auto p = static_cast<std::int64_t>(cycle.size());
  long double run = 0;
  for (std::int64_t n = 1; n <= blocks * p; ++n)
    run += static_cast<long double>(cycle[(n - 1) % p]) / n;
  return run;
}

}  // namespace

TEST_CASE("period-boundary partial sums carry a pure 1/Q tail") {
  // The design premise: at whole-period cutoffs the oscillatory part of the
  // tail cancels, leaving an error that halves when the block count doubles.
  struct Case {
    std::vector<double> cycle;
    double limit;
  };
  const Case cases[] = {
      {{1.0, -1.0}, std::numbers::ln2},
      {{1.0, 0.0, -1.0, 0.0}, std::numbers::pi / 4},
  };
  for (const auto& c : cases) {
    for (std::int64_t q : {64, 128, 256}) {
      const double e1 = static_cast<double>(block_partial_sum(c.cycle, q)) - c.limit;
      const double e2 = static_cast<double>(block_partial_sum(c.cycle, 2 * q)) - c.limit;
      CHECK(std::abs(e2 / e1 - 0.5) < 0.02);
    }
  }
}

TEST_CASE("alternating harmonic series reaches log 2") {
  const std::complex<double> cycle[] = {1.0, -1.0};
  auto r = accelerated_periodic_sum(cycle, 1e-12);
  CHECK(std::abs(r.value.real() - std::numbers::ln2) < 1e-12);
  CHECK(std::abs(r.value.imag()) < 1e-13);
  CHECK(r.error_estimate <= 1e-12);
  CHECK(r.terms_used > 0);
  // True error bounded by the reported estimate.
  CHECK(std::abs(r.value.real() - std::numbers::ln2) <= r.error_estimate);
}

TEST_CASE("Leibniz cycle reaches pi/4") {
  const std::complex<double> cycle[] = {1.0, 0.0, -1.0, 0.0};
  auto r = accelerated_periodic_sum(cycle, 1e-12);
  CHECK(std::abs(r.value.real() - std::numbers::pi / 4) < 1e-12);
  CHECK(std::abs(r.value.real() - std::numbers::pi / 4) <= r.error_estimate);
}

TEST_CASE("complex cycle sums the dilogarithm-style angle series") {
  // sum z^n / n = -log(1 - z) for z = i, via the period-4 cycle i, -1, -i, 1.
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> cycle[] = {i, -1.0, -i, 1.0};
  auto r = accelerated_periodic_sum(cycle, 1e-11);
  std::complex<double> expect = -std::log(std::complex<double>(1.0, -1.0));
  CHECK(std::abs(r.value - expect) < 1e-11);
}

TEST_CASE("error estimate is honest across tolerances") {
  const std::complex<double> cycle[] = {1.0, -1.0};
  for (double tol : {1e-4, 1e-7, 1e-10}) {
    CAPTURE(tol);
    auto r = accelerated_periodic_sum(cycle, tol);
    CHECK(r.error_estimate <= tol);
    CHECK(std::abs(r.value.real() - std::numbers::ln2) <= tol);
  }
}

TEST_CASE("longer periods: sixth roots of unity") {
  // chi-like weights e^{2 pi i n/6}: sum = -log(1 - e^{2 pi i/6})
  std::vector<std::complex<double>> cycle(6);
  for (int j = 0; j < 6; ++j)
    cycle[j] = std::polar(1.0, 2 * std::numbers::pi * ((j + 1) % 6) / 6);
  auto r = accelerated_periodic_sum(cycle, 1e-10);
  std::complex<double> z = std::polar(1.0, 2 * std::numbers::pi / 6);
  CHECK(std::abs(r.value - (-std::log(1.0 - z))) < 1e-10);
}

TEST_CASE("nonzero cycle sum is rejected as divergent") {
  const std::complex<double> cycle[] = {1.0, 1.0};
  CHECK_THROWS_AS(accelerated_periodic_sum(cycle, 1e-8), std::invalid_argument);
  const std::complex<double> harmonic[] = {1.0};
  CHECK_THROWS_AS(accelerated_periodic_sum(harmonic, 1e-8), std::invalid_argument);
}

TEST_CASE("empty cycle and nonpositive tolerance are rejected") {
  std::vector<std::complex<double>> empty;
  CHECK_THROWS_AS(accelerated_periodic_sum(empty, 1e-8), std::invalid_argument);
  const std::complex<double> cycle[] = {1.0, -1.0};
  CHECK_THROWS_AS(accelerated_periodic_sum(cycle, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(accelerated_periodic_sum(cycle, -1.0), std::invalid_argument);
}

TEST_CASE("an impossible budget raises ConvergenceError") {
  const std::complex<double> cycle[] = {1.0, -1.0};
  CHECK_THROWS_AS(accelerated_periodic_sum(cycle, 1e-12, 8), ConvergenceError);
}

TEST_CASE("tolerances far below rounding are not certified") {
  const std::complex<double> cycle[] = {1.0, -1.0};
  CHECK_THROWS_AS(accelerated_periodic_sum(cycle, 1e-30), ConvergenceError);
}

TEST_CASE("budget is respected when convergence succeeds") {
  const std::complex<double> cycle[] = {1.0, 0.0, -1.0, 0.0};
  auto r = accelerated_periodic_sum(cycle, 1e-10, 500'000);
  CHECK(r.terms_used <= 500'000);
}
