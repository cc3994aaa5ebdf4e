#include "cyclo/dedekind.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclo/linalg.hpp"
#include "cyclo/modular.hpp"
#include "cyclo/unit_group.hpp"

namespace cyclo {

HalfGroupTable::HalfGroupTable(std::int64_t m) : m_(m), elements_(half_group(m)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

std::size_t HalfGroupTable::index_of(std::int64_t rep) const {
  const auto it = index_.find(rep);
  if (it == index_.end())
    throw std::invalid_argument("HalfGroupTable::index_of: not a canonical representative");
  return it->second;
}

std::size_t HalfGroupTable::mul(std::size_t i, std::size_t j) const {
  std::int64_t c = elements_.at(i) * elements_.at(j) % m_;
  if (2 * c > m_) c = m_ - c;  // fold to the canonical +-1 representative
  return index_.at(c);
}

std::size_t HalfGroupTable::inverse(std::size_t i) const {
  std::int64_t c = inverse_mod(elements_.at(i), m_);
  if (2 * c > m_) c = m_ - c;
  return index_.at(c);
}

DedekindCheck dedekind_det_check(std::int64_t m,
                                 std::span<const std::complex<double>> f_values,
                                 std::size_t max_order) {
  const HalfGroupTable g(m);
  const std::size_t n = g.size();
  if (n > max_order)
    throw std::invalid_argument("dedekind_det_check: group order exceeds the size bound");
  if (f_values.size() != n)
    throw std::invalid_argument("dedekind_det_check: need one value per group element");

  using C = std::complex<double>;

  std::vector<C> full(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) full[a * n + b] = f_values[g.mul(a, g.inverse(b))];

  // minor over a, b != identity; identity is index 0
  std::vector<C> reduced((n - 1) * (n - 1));
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; b < n; ++b)
      reduced[(a - 1) * (n - 1) + (b - 1)] =
          f_values[g.mul(a, g.inverse(b))] - f_values[a];

  C value_sum = 0.0;
  for (std::size_t a = 0; a < n; ++a) value_sum += f_values[a];

  C character_product = 1.0;
  for (const auto& chi : even_nontrivial(m)) {
    C s = 0.0;
    for (std::size_t a = 0; a < n; ++a)
      s += chi(g.elements()[g.inverse(a)]).to_complex() * f_values[a];
    character_product *= s;
  }

  DedekindCheck out;
  out.full_determinant = determinant(std::move(full), n);
  out.reduced_determinant = determinant(std::move(reduced), n - 1);
  out.value_sum = value_sum;
  out.character_product = character_product;
  // relative defects: determinant magnitudes grow fast with |G|, an absolute
  // gate would drown in rounding at |G| ~ 15
  const C split = value_sum * out.reduced_determinant;
  const double scale_full =
      std::max({1.0, std::abs(out.full_determinant), std::abs(split)});
  const double scale_reduced = std::max(
      {1.0, std::abs(out.reduced_determinant), std::abs(character_product)});
  out.residual =
      std::max(std::abs(out.full_determinant - split) / scale_full,
               std::abs(out.reduced_determinant - character_product) / scale_reduced);
  return out;
}

}  // namespace cyclo
