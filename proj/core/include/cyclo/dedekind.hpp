#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "cyclo/character.hpp"

namespace cyclo {

// Multiplication table of G = (Z/m)* / {+-1} on its canonical representatives
// (the coprime residues in [1, m/2), ascending; index 0 is the identity).
class HalfGroupTable {
 public:
  explicit HalfGroupTable(std::int64_t m);  // m >= 3

  std::int64_t modulus() const { return m_; }
  const std::vector<std::int64_t>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  std::size_t index_of(std::int64_t rep) const;
  std::size_t mul(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const;

 private:
  std::int64_t m_;
  std::vector<std::int64_t> elements_;
  std::unordered_map<std::int64_t, std::size_t> index_;
};

// Both halves of the group-determinant factorization for one test function f
// on G (values indexed like elements()):
//   det[f(ab^-1)]_{a,b}  ==  (sum_a f(a)) * det[f(ab^-1) - f(a)]_{a,b != 1}
//   det[f(ab^-1) - f(a)]_{a,b != 1}  ==  prod_{chi != 1} sum_a chi(a) f(a^-1)
// where chi runs over the characters of G (the even characters mod m).
struct DedekindCheck {
  std::complex<double> full_determinant;
  std::complex<double> reduced_determinant;  // the (a, b != 1) minor
  std::complex<double> value_sum;            // sum_a f(a)
  std::complex<double> character_product;
  double residual;  // max defect of the two identities, relative to their scale
};

// Requires |G| <= max_order (determinant work is O(|G|^3) and the check is
// meant for small groups).
DedekindCheck dedekind_det_check(std::int64_t m,
                                 std::span<const std::complex<double>> f_values,
                                 std::size_t max_order = 24);

}  // namespace cyclo
