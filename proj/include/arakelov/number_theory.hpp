#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "arakelov/polynomial.hpp"

namespace arakelov {

bool is_prime(std::int64_t n);

/// Primes p with lo <= p <= hi, ascending.
std::vector<std::int64_t> primes_between(std::int64_t lo, std::int64_t hi);

/// Smallest prime strictly greater than n.
std::int64_t next_prime(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

/// p-adic valuation of a nonzero integer.
long valuation(const BigInt& n, const BigInt& p);
long valuation(const BigInt& n, std::int64_t p);

/// Prime factorization of |n|. Trial division, then Pollard-Brent rho with a
/// bounded iteration count per split. Whatever cannot be split within that
/// budget is left in `cofactor` (1 when the factorization is complete).
struct Factorization {
  std::vector<std::pair<BigInt, long>> primes;  // ascending
  BigInt cofactor{1};

  bool complete() const { return cofactor == 1; }
};

Factorization factor_integer(const BigInt& n, long rho_iterations = 200000);

}  // namespace arakelov
