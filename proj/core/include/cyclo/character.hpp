#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cyclo/unit_group.hpp"

namespace cyclo {

// Exact rational q mod 1, representing the root of unity e^{2 pi i q}.
// Always stored reduced with 0 <= num < den.
class RationalAngle {
 public:
  RationalAngle() = default;
  RationalAngle(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  RationalAngle operator+(const RationalAngle& o) const;
  RationalAngle operator-() const;
  RationalAngle scaled(std::int64_t k) const;  // k * angle mod 1

  bool operator==(const RationalAngle&) const = default;

  double turns() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::complex<double> to_complex() const;  // e^{2 pi i num/den}

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Value of a Dirichlet character: 0, or an exact root of unity.
class CharacterValue {
 public:
  static CharacterValue zero() { return CharacterValue(true, {}); }
  static CharacterValue angle(RationalAngle a) { return CharacterValue(false, a); }

  bool is_zero() const { return zero_; }
  const RationalAngle& angle() const;  // requires !is_zero()
  std::complex<double> to_complex() const;

  bool operator==(const CharacterValue&) const = default;

 private:
  CharacterValue(bool z, RationalAngle a) : zero_(z), angle_(a) {}
  bool zero_ = true;
  RationalAngle angle_;
};

// Dirichlet character mod m, stored as the exponent vector of its values on
// the unit-group generators: chi(g_i) = e^{2 pi i e_i / orders()[i]}.
// Characters of the same modulus share one UnitGroup.
class DirichletCharacter {
 public:
  DirichletCharacter(std::shared_ptr<const UnitGroup> structure,
                     std::vector<std::int64_t> exponents);

  // The character of modulus 1 (identically 1 on all integers).
  static DirichletCharacter trivial();

  std::int64_t modulus() const { return modulus_; }
  const std::vector<std::int64_t>& exponents() const { return exponents_; }

  CharacterValue operator()(std::int64_t n) const;

  bool is_principal() const;
  bool is_even() const;  // chi(-1) == 1
  bool is_odd() const { return !is_even(); }

  // Smallest f | m such that chi(k) == 1 whenever k == 1 (mod f), gcd(k,m)=1.
  std::int64_t conductor() const;
  bool is_primitive() const { return conductor() == modulus_; }

  // The primitive character of modulus conductor() inducing this one.
  DirichletCharacter primitive() const;

  DirichletCharacter conjugate() const;

  // "m:e1,e2,..." (exponents over the canonical generators)
  std::string label() const;

  // Lexicographic on (modulus, exponent vector); the canonical group order.
  std::strong_ordering operator<=>(const DirichletCharacter& o) const;
  bool operator==(const DirichletCharacter& o) const;

 private:
  DirichletCharacter() : modulus_(1) {}  // the modulus-1 character

  std::int64_t modulus_;
  std::shared_ptr<const UnitGroup> structure_;  // null only for modulus 1
  std::vector<std::int64_t> exponents_;
};

// All phi(m) characters mod m in label order.  Requires m >= 3.
std::vector<DirichletCharacter> character_group(std::int64_t m);

// The even characters mod m excluding the principal one, in label order.
std::vector<DirichletCharacter> even_nontrivial(std::int64_t m);

}  // namespace cyclo
