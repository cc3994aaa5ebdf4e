#include "cyclo/modular.hpp"

#include <numeric>
#include <stdexcept>

namespace cyclo {

std::int64_t PrimePower::value() const {
  std::int64_t v = 1;
  for (int i = 0; i < exponent; ++i) v *= prime;
  return v;
}

Factorization factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  Factorization out;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
  std::int64_t phi = 1;
  for (const auto& [p, e] : factorize(n)) {
    std::int64_t pe = 1;
    for (int i = 1; i < e; ++i) pe *= p;
    phi *= pe * (p - 1);
  }
  return phi;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  const auto f = factorize(n);
  return f.size() == 1 && f[0].exponent == 1;
}

bool is_prime_power(std::int64_t n) {
  if (n < 2) return false;
  return factorize(n).size() == 1;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("pow_mod: modulus must be >= 1");
  if (exp < 0) throw std::invalid_argument("pow_mod: exponent must be >= 0");
  base %= m;
  if (base < 0) base += m;
  std::int64_t acc = 1 % m;
  while (exp > 0) {
    if (exp & 1) acc = acc * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return acc;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("inverse_mod: modulus must be >= 1");
  a %= m;
  if (a < 0) a += m;
  // extended Euclid: r0*x == r (mod m) maintained for the first column
  std::int64_t r0 = m, r1 = a, x0 = 0, x1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    x0 -= q * x1;
    std::swap(x0, x1);
  }
  if (r0 != 1) throw std::invalid_argument("inverse_mod: argument not coprime to modulus");
  x0 %= m;
  if (x0 < 0) x0 += m;
  return x0;
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("multiplicative_order: modulus must be >= 1");
  a %= m;
  if (a < 0) a += m;
  if (std::gcd(a, m) != 1)
    throw std::invalid_argument("multiplicative_order: argument not coprime to modulus");
  // order divides phi(m); strip prime factors from phi while the power stays 1
  std::int64_t order = euler_phi(m);
  for (const auto& [p, e] : factorize(order)) {
    (void)e;
    while (order % p == 0 && pow_mod(a, order / p, m) == 1) order /= p;
  }
  return order;
}

std::int64_t primitive_root(std::int64_t q) {
  const auto f = factorize(q);
  if (f.size() != 1 || f[0].prime == 2)
    throw std::invalid_argument("primitive_root: argument must be an odd prime power");
  const std::int64_t phi = euler_phi(q);
  for (std::int64_t g = 2; g < q; ++g) {
    if (std::gcd(g, q) != 1) continue;
    if (multiplicative_order(g, q) == phi) return g;
  }
  throw std::logic_error("primitive_root: search exhausted");  // unreachable for valid q
}

CrtSplit::CrtSplit(std::int64_t m) : m_(m) {
  if (m < 2) throw std::invalid_argument("CrtSplit: modulus must be >= 2");
  for (const auto& pp : factorize(m)) moduli_.push_back(pp.value());
  for (const std::int64_t q : moduli_) {
    const std::int64_t rest = m_ / q;
    // e_i = rest * (rest^{-1} mod q): 1 mod q, 0 mod every other factor
    idempotents_.push_back(rest % m_ * inverse_mod(rest, q) % m_);
  }
}

std::vector<std::int64_t> CrtSplit::project(std::int64_t a) const {
  a %= m_;
  if (a < 0) a += m_;
  std::vector<std::int64_t> out;
  out.reserve(moduli_.size());
  for (const std::int64_t q : moduli_) out.push_back(a % q);
  return out;
}

std::int64_t CrtSplit::lift(const std::vector<std::int64_t>& residues) const {
  if (residues.size() != moduli_.size())
    throw std::invalid_argument("CrtSplit::lift: residue count mismatch");
  std::int64_t a = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    std::int64_t r = residues[i] % moduli_[i];
    if (r < 0) r += moduli_[i];
    a = (a + r % m_ * idempotents_[i]) % m_;
  }
  return a;
}

}  // namespace cyclo
