#pragma once

#include <cstdint>
#include <vector>

namespace cyclo {

// One prime-power factor p^e of a factored integer.
struct PrimePower {
  std::int64_t prime = 0;
  int exponent = 0;

  std::int64_t value() const;
  bool operator==(const PrimePower&) const = default;
};

// Prime factorization in ascending prime order.  factorize(1) == {}.
using Factorization = std::vector<PrimePower>;

Factorization factorize(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

bool is_prime(std::int64_t n);

// True for n = p^k with k >= 1 (so 1 is not a prime power).
bool is_prime_power(std::int64_t n);

// (base^exp) mod m for m >= 1, exp >= 0.  Handles negative base.
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m);

// Inverse of a modulo m; requires gcd(a, m) == 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

// Least k >= 1 with a^k == 1 (mod m); requires gcd(a, m) == 1.
std::int64_t multiplicative_order(std::int64_t a, std::int64_t m);

// Smallest primitive root modulo q, for q an odd prime power.
std::int64_t primitive_root(std::int64_t q);

// Residue splitting of Z/m into its prime-power parts (ascending prime order).
class CrtSplit {
 public:
  explicit CrtSplit(std::int64_t m);  // m >= 2

  std::int64_t modulus() const { return m_; }
  const std::vector<std::int64_t>& moduli() const { return moduli_; }

  // a mod m -> (a mod q_1, ..., a mod q_r)
  std::vector<std::int64_t> project(std::int64_t a) const;

  // (a_1, ..., a_r) -> unique a mod m with a == a_i (mod q_i)
  std::int64_t lift(const std::vector<std::int64_t>& residues) const;

 private:
  std::int64_t m_;
  std::vector<std::int64_t> moduli_;
  std::vector<std::int64_t> idempotents_;  // e_i == 1 mod q_i, 0 mod q_j (j != i)
};

}  // namespace cyclo
