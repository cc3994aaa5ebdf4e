#include "cyclo/character.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace cyclo {

RationalAngle::RationalAngle(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("RationalAngle: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

RationalAngle RationalAngle::operator+(const RationalAngle& o) const {
  const std::int64_t l = std::lcm(den_, o.den_);
  return RationalAngle(num_ * (l / den_) + o.num_ * (l / o.den_), l);
}

RationalAngle RationalAngle::operator-() const { return RationalAngle(-num_, den_); }

RationalAngle RationalAngle::scaled(std::int64_t k) const {
  std::int64_t r = k % den_;
  if (r < 0) r += den_;
  return RationalAngle(num_ * r, den_);
}

std::complex<double> RationalAngle::to_complex() const {
  const double t = 2.0 * std::numbers::pi * turns();
  return {std::cos(t), std::sin(t)};
}

const RationalAngle& CharacterValue::angle() const {
  if (zero_) throw std::logic_error("CharacterValue::angle: value is zero");
  return angle_;
}

std::complex<double> CharacterValue::to_complex() const {
  return zero_ ? std::complex<double>(0.0, 0.0) : angle_.to_complex();
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroup> structure,
                                       std::vector<std::int64_t> exponents)
    : modulus_(structure ? structure->modulus() : 1),
      structure_(std::move(structure)),
      exponents_(std::move(exponents)) {
  if (!structure_) throw std::invalid_argument("DirichletCharacter: null unit group");
  const auto& ords = structure_->orders();
  if (exponents_.size() != ords.size())
    throw std::invalid_argument("DirichletCharacter: exponent count mismatch");
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    exponents_[i] %= ords[i];
    if (exponents_[i] < 0) exponents_[i] += ords[i];
  }
}

DirichletCharacter DirichletCharacter::trivial() { return DirichletCharacter(); }

CharacterValue DirichletCharacter::operator()(std::int64_t n) const {
  if (modulus_ == 1) return CharacterValue::angle(RationalAngle());
  std::int64_t a = n % modulus_;
  if (a < 0) a += modulus_;
  if (std::gcd(a, modulus_) != 1) return CharacterValue::zero();
  const auto d = structure_->dlog(a);
  const auto& ords = structure_->orders();
  RationalAngle angle;
  for (std::size_t i = 0; i < d.size(); ++i)
    angle = angle + RationalAngle(exponents_[i] * d[i], ords[i]);
  return CharacterValue::angle(angle);
}

bool DirichletCharacter::is_principal() const {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](std::int64_t e) { return e == 0; });
}

bool DirichletCharacter::is_even() const {
  if (modulus_ == 1) return true;
  const auto v = (*this)(modulus_ - 1);
  return v.angle().num() == 0;
}

std::int64_t DirichletCharacter::conductor() const {
  if (modulus_ == 1) return 1;
  // smallest divisor f of m whose residue-1 class lies in the kernel
  for (std::int64_t f = 1; f <= modulus_; ++f) {
    if (modulus_ % f != 0) continue;
    bool kernel = true;
    for (std::int64_t k = 1; k < modulus_ && kernel; k += f) {
      if (std::gcd(k, modulus_) != 1) continue;
      const auto v = (*this)(k);
      kernel = v.angle().num() == 0;
    }
    if (kernel) return f;
  }
  throw std::logic_error("conductor: no admissible divisor");  // f = m always works
}

DirichletCharacter DirichletCharacter::primitive() const {
  const std::int64_t f = conductor();
  if (f == modulus_) return *this;
  if (f == 1) return trivial();
  auto target = std::make_shared<const UnitGroup>(f);
  // read off the exponent of the induced character on each generator of
  // (Z/f)*: lift the generator to a unit mod m in the same residue class
  std::vector<std::int64_t> exponents;
  const auto& gens = target->generators();
  const auto& ords = target->orders();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::int64_t n = gens[i];
    while (std::gcd(n, modulus_) != 1) n += f;
    const auto v = (*this)(n);
    // chi(n) is a root of unity of order dividing ord(g_i)
    const RationalAngle a = v.angle();
    if (ords[i] % a.den() != 0)
      throw std::logic_error("primitive: induced value has incompatible order");
    exponents.push_back(a.num() * (ords[i] / a.den()));
  }
  return DirichletCharacter(std::move(target), std::move(exponents));
}

DirichletCharacter DirichletCharacter::conjugate() const {
  if (modulus_ == 1) return *this;
  std::vector<std::int64_t> e;
  e.reserve(exponents_.size());
  for (const std::int64_t x : exponents_) e.push_back(-x);
  return DirichletCharacter(structure_, std::move(e));
}

std::string DirichletCharacter::label() const {
  std::string out = std::to_string(modulus_) + ":";
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(exponents_[i]);
  }
  return out;
}

std::strong_ordering DirichletCharacter::operator<=>(const DirichletCharacter& o) const {
  if (auto c = modulus_ <=> o.modulus_; c != 0) return c;
  return exponents_ <=> o.exponents_;
}

bool DirichletCharacter::operator==(const DirichletCharacter& o) const {
  return modulus_ == o.modulus_ && exponents_ == o.exponents_;
}

std::vector<DirichletCharacter> character_group(std::int64_t m) {
  if (m < 3) throw std::invalid_argument("character_group: modulus must be >= 3");
  auto structure = std::make_shared<const UnitGroup>(m);
  const auto& ords = structure->orders();
  std::vector<DirichletCharacter> out;
  out.reserve(static_cast<std::size_t>(structure->order()));
  std::vector<std::int64_t> e(ords.size(), 0);
  for (;;) {
    out.emplace_back(structure, e);
    std::size_t i = e.size();
    while (i-- > 0) {
      if (++e[i] < ords[i]) break;
      e[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;  // full wrap: enumeration done
  }
  return out;
}

std::vector<DirichletCharacter> even_nontrivial(std::int64_t m) {
  std::vector<DirichletCharacter> out;
  for (auto& chi : character_group(m))
    if (!chi.is_principal() && chi.is_even()) out.push_back(std::move(chi));
  return out;
}

}  // namespace cyclo
