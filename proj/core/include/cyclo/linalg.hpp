#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cyclo {

// Determinant of a dense n x n row-major matrix by Gaussian elimination with
// partial pivoting.  Works for real scalar types (double, long double,
// multiprecision floats) and std::complex of those.  The empty matrix has
// determinant 1.
template <class T>
T determinant(std::vector<T> a, std::size_t n) {
  if (a.size() != n * n) throw std::invalid_argument("determinant: shape mismatch");
  using std::abs;
  T det = T(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    auto best = abs(a[col * n + col]);
    for (std::size_t row = col + 1; row < n; ++row) {
      auto mag = abs(a[row * n + col]);
      if (mag > best) {
        best = mag;
        pivot = row;
      }
    }
    if (!(best > 0)) return T(0);
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(a[pivot * n + j], a[col * n + j]);
      det = -det;
    }
    const T d = a[col * n + col];
    det *= d;
    for (std::size_t row = col + 1; row < n; ++row) {
      const T factor = a[row * n + col] / d;
      for (std::size_t j = col + 1; j < n; ++j) a[row * n + j] -= factor * a[col * n + j];
    }
  }
  return det;
}

// Product of row Euclidean norms: the Hadamard upper bound on |det|, used to
// scale singularity thresholds.
template <class T>
T hadamard_bound(const std::vector<T>& a, std::size_t n) {
  if (a.size() != n * n) throw std::invalid_argument("hadamard_bound: shape mismatch");
  using std::sqrt;
  T bound = T(1);
  for (std::size_t row = 0; row < n; ++row) {
    T s = T(0);
    for (std::size_t j = 0; j < n; ++j) s += a[row * n + j] * a[row * n + j];
    bound *= sqrt(s);
  }
  return bound;
}

}  // namespace cyclo
