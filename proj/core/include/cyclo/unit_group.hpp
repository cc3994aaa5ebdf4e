#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cyclo/modular.hpp"

namespace cyclo {

// Generator/order decomposition of (Z/m)* with exact discrete logarithms.
//
// Per prime-power factor q of m (ascending prime order):
//   q odd:          one generator, the smallest primitive root mod q
//   q = 2:          no generator
//   q = 4:          generator -1 (i.e. q-1), order 2
//   q = 2^n, n>=3:  generators {-1, 5}, orders {2, 2^(n-2)}, -1 listed first
// Factor generators are lifted to Z/m (== 1 mod the other factors) and
// concatenated; the order list multiplies to phi(m).
class UnitGroup {
 public:
  explicit UnitGroup(std::int64_t m);  // m >= 3

  std::int64_t modulus() const { return m_; }
  std::int64_t order() const { return phi_; }
  const std::vector<std::int64_t>& generators() const { return generators_; }
  const std::vector<std::int64_t>& orders() const { return orders_; }

  // Exponent vector (e_1, ..., e_r), 0 <= e_i < orders()[i], with
  // a == prod generators()[i]^e_i (mod m).  Requires gcd(a, m) == 1.
  std::vector<std::int64_t> dlog(std::int64_t a) const;

  // Inverse of dlog: exponent vector -> residue.
  std::int64_t from_exponents(const std::vector<std::int64_t>& exponents) const;

 private:
  std::int64_t m_;
  std::int64_t phi_;
  std::vector<std::int64_t> generators_;
  std::vector<std::int64_t> orders_;
  std::unordered_map<std::int64_t, std::vector<std::int64_t>> table_;
};

// Canonical representatives of (Z/m)*/{+-1}: the residues coprime to m in
// [1, m/2), sorted ascending.  Requires m >= 3.
std::vector<std::int64_t> half_group(std::int64_t m);

// Whether {-1, 2} generates all of (Z/q)*, for q an odd prime power.
bool minus_one_two_generate(std::int64_t q);

}  // namespace cyclo
