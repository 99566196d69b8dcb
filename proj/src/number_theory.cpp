#include "densesol/number_theory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace densesol {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus) {
  if (modulus == 1) return 0;
  std::uint64_t result = 1;
  base %= modulus;
  while (exp > 0) {
    if (exp & 1) result = result * base % modulus;
    base = base * base % modulus;
    exp >>= 1;
  }
  return result;
}

std::uint64_t multiplicative_order(std::uint64_t r, std::uint64_t m) {
  if (m == 0) throw std::domain_error("multiplicative order: modulus must be positive");
  if (m == 1) return 1;
  if (std::gcd(r % m, m) != 1)
    throw std::domain_error("multiplicative order: gcd(r, m) != 1");
  std::uint64_t k = 1;
  for (std::uint64_t x = r % m; x != 1; x = x * (r % m) % m) ++k;
  return k;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 1; i * i <= n; ++i) {
    if (n % i) continue;
    out.push_back(i);
    if (i * i != n) out.push_back(n / i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace densesol
