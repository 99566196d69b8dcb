#pragma once

#include <cstdint>
#include <vector>

namespace densesol {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// base^exp mod modulus. modulus must be below 2^32.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus);

/// Least k >= 1 with r^k = 1 (mod m). Throws std::domain_error when
/// gcd(r, m) != 1 or m == 0. For m == 1 the answer is 1.
std::uint64_t multiplicative_order(std::uint64_t r, std::uint64_t m);

/// Trial division; exact for the orders used here.
bool is_prime(std::uint64_t n);

/// Prime factorization in increasing prime order; empty for n <= 1.
std::vector<PrimePower> factorize(std::uint64_t n);

/// Positive divisors in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace densesol
