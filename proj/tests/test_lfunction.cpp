#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cyclo/character.hpp"
#include "cyclo/lfunction.hpp"
#include "cyclo/modular.hpp"

using cyclo::character_group;
using cyclo::DirichletCharacter;
using namespace std::complex_literals;

namespace {

// All primitive characters whose conductor equals f.
std::vector<DirichletCharacter> primitive_characters(std::int64_t f) {
  std::vector<DirichletCharacter> out;
  for (const auto& chi : character_group(f))
    if (chi.is_primitive()) out.push_back(chi);
  return out;
}

DirichletCharacter quadratic_character(std::int64_t p) {
  for (const auto& chi : character_group(p))
    if (!chi.is_principal() && chi == chi.conjugate()) return chi;
  throw std::logic_error("no quadratic character");
}

}  // namespace

TEST_CASE("gauss sums of the reference characters") {
  // Odd quadratic character mod 4: tau = i - i^3 ... = 2i.
  auto chars4 = character_group(4);
  CHECK(std::abs(cyclo::gauss_sum(chars4[1]) - 2.0i) < 1e-12);

  // Quadratic character mod 5 (even): tau = sqrt(5).
  CHECK(std::abs(cyclo::gauss_sum(quadratic_character(5)) - std::sqrt(5.0)) < 1e-12);

  // Modulus-1 character: empty sum convention tau = 1.
  CHECK(std::abs(cyclo::gauss_sum(DirichletCharacter::trivial()) - 1.0) < 1e-15);

  // The even quadratic character mod 8 has tau = sqrt(8).
  for (const auto& chi : character_group(8)) {
    if (chi.is_primitive() && chi.is_even() && chi == chi.conjugate())
      CHECK(std::abs(cyclo::gauss_sum(chi) - std::sqrt(8.0)) < 1e-12);
  }
}

TEST_CASE("gauss sum magnitude is sqrt(f) for every primitive character") {
  for (std::int64_t f = 3; f <= 100; ++f) {
    if (f % 4 == 2) continue;  // no primitive characters at these levels
    for (const auto& chi : primitive_characters(f)) {
      CAPTURE(f);
      CAPTURE(chi.label());
      CHECK(std::abs(std::abs(cyclo::gauss_sum(chi)) - std::sqrt(static_cast<double>(f))) <
            1e-9);
    }
  }
}

TEST_CASE("twisted sums factor through the gauss sum") {
  // sum_r chi(r) zeta_f^{rk} = conj(chi(k)) tau(chi) for primitive chi.
  for (std::int64_t f : {5, 7, 8, 9, 12, 13, 16, 21, 25, 36, 49, 50}) {
    if (f % 4 == 2) continue;
    for (const auto& chi : primitive_characters(f)) {
      auto tau = cyclo::gauss_sum(chi);
      for (std::int64_t k = 0; k < f; ++k) {
        std::complex<double> s = 0;
        for (std::int64_t r = 1; r <= f; ++r) {
          auto v = chi(r);
          if (v.is_zero()) continue;
          s += (v.angle() + cyclo::RationalAngle(r * k, f)).to_complex();
        }
        std::complex<double> expect =
            chi(k).is_zero() ? 0.0 : chi.conjugate()(k).to_complex() * tau;
        CAPTURE(f);
        CAPTURE(chi.label());
        CAPTURE(k);
        CHECK(std::abs(s - expect) < 1e-10);
      }
    }
  }
}

TEST_CASE("closed forms hit the classical constants") {
  // L(1, chi_4) = pi/4 (Leibniz).
  auto chi4 = character_group(4)[1];
  CHECK(std::abs(cyclo::l_one_closed(chi4) - std::numbers::pi / 4) < 1e-12);
  // chi_4(2) = 0, so the alternating value coincides.
  CHECK(std::abs(cyclo::l_e_one_closed(chi4) - std::numbers::pi / 4) < 1e-12);

  // L(1, chi_3) = pi / (3 sqrt 3).
  auto chi3 = character_group(3)[1];
  CHECK(std::abs(cyclo::l_one_closed(chi3) - std::numbers::pi / (3 * std::sqrt(3.0))) <
        1e-12);

  // Quadratic mod 5: L = 2 log(phi) / sqrt 5, and L_E = 2 L since chi(2) = -1.
  auto chi5 = quadratic_character(5);
  const double golden = (1 + std::sqrt(5.0)) / 2;
  const double l5 = 2 * std::log(golden) / std::sqrt(5.0);
  CHECK(std::abs(cyclo::l_one_closed(chi5) - l5) < 1e-12);
  CHECK(std::abs(cyclo::l_e_one_closed(chi5) - 2 * l5) < 1e-12);

  // Quadratic mod 7 (odd): L = pi / sqrt 7.
  auto chi7 = quadratic_character(7);
  CHECK(std::abs(cyclo::l_one_closed(chi7) - std::numbers::pi / std::sqrt(7.0)) < 1e-12);

  // Even quadratic mod 8: L = log(1 + sqrt 2) / sqrt 2, L_E equal (chi(2) = 0).
  for (const auto& chi : primitive_characters(8)) {
    if (!chi.is_even()) continue;
    const double expect = std::log(1 + std::sqrt(2.0)) / std::sqrt(2.0);
    CHECK(std::abs(cyclo::l_one_closed(chi) - expect) < 1e-12);
    CHECK(std::abs(cyclo::l_e_one_closed(chi) - expect) < 1e-12);
  }
}

TEST_CASE("alternating value of the modulus-1 character is log 2") {
  auto r = cyclo::l_e_one_series(DirichletCharacter::trivial(), 1e-11);
  CHECK(std::abs(r.value - std::numbers::ln2) < 1e-11);
}

TEST_CASE("euler factor links the two closed forms") {
  for (std::int64_t f : {5, 7, 9, 11, 13, 16, 25}) {
    for (const auto& chi : primitive_characters(f)) {
      CAPTURE(f);
      CAPTURE(chi.label());
      auto lhs = cyclo::l_e_one_closed(chi);
      auto rhs = cyclo::euler_factor_two(chi) * cyclo::l_one_closed(chi);
      CHECK(std::abs(lhs - rhs) < 1e-10);
    }
  }
}

TEST_CASE("both even closed forms agree") {
  for (std::int64_t f : {5, 7, 8, 9, 11, 12, 13, 16, 24, 40}) {
    for (const auto& chi : primitive_characters(f)) {
      if (!chi.is_even()) continue;
      CAPTURE(f);
      CAPTURE(chi.label());
      CHECK(std::abs(cyclo::l_e_one_closed(chi) - cyclo::l_e_one_closed_full_range(chi)) <
            1e-10);
    }
  }
}

TEST_CASE("series evaluations agree with the closed forms") {
  for (std::int64_t f : {3, 4, 5, 7, 8, 9, 11, 12, 13, 15, 16}) {
    if (f % 4 == 2) continue;
    for (const auto& chi : primitive_characters(f)) {
      CAPTURE(f);
      CAPTURE(chi.label());
      auto le = cyclo::l_e_one_series(chi, 1e-9);
      CHECK(le.error_estimate <= 1e-9);
      CHECK(std::abs(le.value - cyclo::l_e_one_closed(chi)) < 1e-8);
      auto l = cyclo::l_one_series(chi, 1e-9);
      CHECK(l.error_estimate <= 1e-9);
      CHECK(std::abs(l.value - cyclo::l_one_closed(chi)) < 1e-8);
    }
  }
}

TEST_CASE("series route covers imprimitive characters too") {
  // Lift of the quadratic character mod 3 to modulus 15.  Its plain L-value
  // at the lifted level drops the local factor at 5:
  //   L = (1 - chi_3(5)/5) L(1, chi_3) = (6/5) pi/(3 sqrt 3),
  // and chi(2) = -1 doubles it on the alternating side.
  for (const auto& chi : character_group(15)) {
    if (chi.conductor() != 3) continue;
    auto r = cyclo::l_e_one_series(chi, 1e-10);
    const double expect = 2 * (6.0 / 5.0) * std::numbers::pi / (3 * std::sqrt(3.0));
    CHECK(std::abs(r.value.real() - expect) < 1e-9);
    CHECK(std::abs(r.value.imag()) < 1e-9);
  }
}

TEST_CASE("conjugate characters give conjugate values") {
  for (std::int64_t f : {5, 7, 13, 16}) {
    for (const auto& chi : primitive_characters(f)) {
      auto bar = chi.conjugate();
      CHECK(std::abs(cyclo::l_one_closed(bar) - std::conj(cyclo::l_one_closed(chi))) <
            1e-12);
      CHECK(std::abs(cyclo::gauss_sum(bar) - std::conj(cyclo::gauss_sum(chi)) *
                                                 (chi.is_even() ? 1.0 : -1.0)) < 1e-12);
    }
  }
}

TEST_CASE("closed forms reject principal and imprimitive input") {
  auto principal5 = character_group(5)[0];
  CHECK_THROWS_AS(cyclo::l_one_closed(principal5), std::invalid_argument);
  CHECK_THROWS_AS(cyclo::l_e_one_closed(principal5), std::invalid_argument);
  for (const auto& chi : character_group(15)) {
    if (chi.is_primitive()) continue;
    CHECK_THROWS_AS(cyclo::l_one_closed(chi), std::invalid_argument);
    CHECK_THROWS_AS(cyclo::gauss_sum(chi), std::invalid_argument);
  }
  // Odd characters have no full-range log form.
  auto chi4 = character_group(4)[1];
  CHECK_THROWS_AS(cyclo::l_e_one_closed_full_range(chi4), std::invalid_argument);
}

TEST_CASE("series rejects the divergent principal cases") {
  // Principal character of even modulus: alternating coefficients do not
  // cancel, the series diverges.
  auto principal8 = character_group(8)[0];
  CHECK_THROWS_AS(cyclo::l_e_one_series(principal8, 1e-8), std::invalid_argument);
  auto principal5 = character_group(5)[0];
  CHECK_THROWS_AS(cyclo::l_one_series(principal5, 1e-8), std::invalid_argument);
  // Principal of odd modulus alternates fine: dropping the multiples of 5
  // from the alternating harmonic series leaves (1 - 1/5) log 2.
  auto r = cyclo::l_e_one_series(principal5, 1e-10);
  CHECK(std::abs(r.value.real() - 0.8 * std::numbers::ln2) < 1e-9);
  CHECK(std::abs(r.value.imag()) < 1e-10);
}
