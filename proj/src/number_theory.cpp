#include "arakelov/number_theory.hpp"

#include <algorithm>
#include <map>

#include "arakelov/errors.hpp"

namespace arakelov {

namespace {

constexpr std::int64_t kTrialLimit = 1 << 16;

const std::vector<std::int64_t>& small_primes() {
  static const std::vector<std::int64_t> table = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<std::int64_t> out;
    for (std::int64_t i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::int64_t j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return table;
}

bool probable_prime(const BigInt& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// One nontrivial factor of an odd composite n, or 0 if the budget runs out.
BigInt pollard_brent(const BigInt& n, long budget) {
  for (unsigned long c = 1; c <= 5; ++c) {
    BigInt y = 2, x, q = 1, g = 1, ys, t;
    long r = 1, spent = 0;
    const long batch = 128;
    auto step = [&](BigInt& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (g == 1 && spent < budget) {
      x = y;
      for (long i = 0; i < r; ++i) step(y);
      long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (long i = 0; i < std::min(batch, r - k); ++i) {
          step(y);
          t = abs(x - y);
          q = q * t;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += batch;
        spent += batch;
      }
      r *= 2;
    }
    if (g == n) {
      // Backtrack one step at a time from the saved state.
      do {
        step(ys);
        t = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
    if (spent >= budget) return 0;
  }
  return 0;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(BigInt(static_cast<long>(n)).get_mpz_t(), 30) > 0;
}

std::vector<std::int64_t> primes_between(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  if (hi < 2 || hi < lo) return out;
  lo = std::max<std::int64_t>(lo, 2);
  std::vector<bool> composite(static_cast<std::size_t>(hi + 1), false);
  for (std::int64_t i = 2; i * i <= hi; ++i) {
    if (composite[i]) continue;
    for (std::int64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  for (std::int64_t i = lo; i <= hi; ++i)
    if (!composite[i]) out.push_back(i);
  return out;
}

std::int64_t next_prime(std::int64_t n) {
  std::int64_t m = std::max<std::int64_t>(n + 1, 2);
  while (!is_prime(m)) ++m;
  return m;
}

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw DomainError("euler_phi: n must be positive");
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

long valuation(const BigInt& n, const BigInt& p) {
  if (n == 0) throw DomainError("valuation of zero is infinite");
  BigInt rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long valuation(const BigInt& n, std::int64_t p) { return valuation(n, BigInt(static_cast<long>(p))); }

Factorization factor_integer(const BigInt& n_in, long rho_iterations) {
  Factorization out;
  BigInt n = abs(n_in);
  if (n == 0) throw DomainError("factor_integer: zero");
  std::map<BigInt, long> found;

  for (std::int64_t p : small_primes()) {
    if (BigInt(static_cast<long>(p * p)) > n) break;
    BigInt bp(static_cast<long>(p));
    if (mpz_divisible_p(n.get_mpz_t(), bp.get_mpz_t()))
      found[bp] = static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), bp.get_mpz_t()));
  }

  std::vector<BigInt> pending;
  if (n > 1) pending.push_back(n);
  BigInt stuck = 1;
  while (!pending.empty()) {
    BigInt m = pending.back();
    pending.pop_back();
    if (m == 1) continue;
    if (probable_prime(m)) {
      found[m] += 1;
      continue;
    }
    if (mpz_perfect_square_p(m.get_mpz_t())) {
      BigInt s = sqrt(m);
      pending.push_back(s);
      pending.push_back(s);
      continue;
    }
    BigInt g = pollard_brent(m, rho_iterations);
    if (g == 0) {
      stuck *= m;
      continue;
    }
    pending.push_back(g);
    pending.push_back(m / g);
  }
  for (auto& [p, e] : found) out.primes.emplace_back(p, e);
  out.cofactor = stuck;
  return out;
}

}  // namespace arakelov
