#include "cyclo/unit_group.hpp"

#include <numeric>
#include <stdexcept>

namespace cyclo {

namespace {

// Generators and orders of (Z/q)* for one prime power q.
void factor_generators(std::int64_t q, std::vector<std::int64_t>& gens,
                       std::vector<std::int64_t>& ords) {
  if (q % 2 == 1) {
    gens.push_back(primitive_root(q));
    ords.push_back(euler_phi(q));
  } else if (q == 2) {
    // trivial group
  } else if (q == 4) {
    gens.push_back(3);
    ords.push_back(2);
  } else {
    gens.push_back(q - 1);
    ords.push_back(2);
    gens.push_back(5);
    ords.push_back(q / 4);
  }
}

}  // namespace

UnitGroup::UnitGroup(std::int64_t m) : m_(m), phi_(euler_phi(m)) {
  if (m < 3) throw std::invalid_argument("UnitGroup: modulus must be >= 3");
  CrtSplit split(m);
  for (const std::int64_t q : split.moduli()) {
    std::vector<std::int64_t> gens, ords;
    factor_generators(q, gens, ords);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      // lift: == generator mod q, == 1 mod the other factors
      std::vector<std::int64_t> residues;
      for (const std::int64_t qq : split.moduli()) residues.push_back(qq == q ? gens[i] : 1);
      generators_.push_back(split.lift(residues));
      orders_.push_back(ords[i]);
    }
  }

  // enumerate all exponent vectors odometer-style; carries wrap for free
  // because g^order == 1
  table_.reserve(static_cast<std::size_t>(phi_));
  std::vector<std::int64_t> e(generators_.size(), 0);
  std::int64_t value = 1 % m_;
  for (std::int64_t count = 0;; ++count) {
    table_.emplace(value, e);
    if (count + 1 == phi_) break;
    std::size_t i = e.size();
    while (i-- > 0) {
      value = value * generators_[i] % m_;
      if (++e[i] < orders_[i]) break;
      e[i] = 0;
    }
  }
  if (static_cast<std::int64_t>(table_.size()) != phi_)
    throw std::logic_error("UnitGroup: generator decomposition does not enumerate the group");
}

std::vector<std::int64_t> UnitGroup::dlog(std::int64_t a) const {
  a %= m_;
  if (a < 0) a += m_;
  const auto it = table_.find(a);
  if (it == table_.end())
    throw std::invalid_argument("UnitGroup::dlog: argument not coprime to modulus");
  return it->second;
}

std::int64_t UnitGroup::from_exponents(const std::vector<std::int64_t>& exponents) const {
  if (exponents.size() != generators_.size())
    throw std::invalid_argument("UnitGroup::from_exponents: exponent count mismatch");
  std::int64_t value = 1 % m_;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    std::int64_t e = exponents[i] % orders_[i];
    if (e < 0) e += orders_[i];
    value = value * pow_mod(generators_[i], e, m_) % m_;
  }
  return value;
}

std::vector<std::int64_t> half_group(std::int64_t m) {
  if (m < 3) throw std::invalid_argument("half_group: modulus must be >= 3");
  std::vector<std::int64_t> reps;
  for (std::int64_t k = 1; 2 * k < m; ++k)
    if (std::gcd(k, m) == 1) reps.push_back(k);
  return reps;
}

bool minus_one_two_generate(std::int64_t q) {
  const auto f = factorize(q);
  if (f.size() != 1 || f[0].prime == 2)
    throw std::invalid_argument("minus_one_two_generate: argument must be an odd prime power");
  const std::int64_t ord2 = multiplicative_order(2, q);
  // |<-1, 2>| = ord(2) if -1 is a power of 2, else 2 * ord(2)
  bool minus_one_in = false;
  std::int64_t pw = 1;
  for (std::int64_t k = 0; k < ord2; ++k) {
    if (pw == q - 1) minus_one_in = true;
    pw = pw * 2 % q;
  }
  const std::int64_t size = minus_one_in ? ord2 : 2 * ord2;
  return size == euler_phi(q);
}

}  // namespace cyclo
