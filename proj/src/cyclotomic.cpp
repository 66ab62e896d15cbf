#include "arakelov/cyclotomic.hpp"

#include <gmpxx.h>

#include "arakelov/errors.hpp"
#include "arakelov/number_theory.hpp"

namespace arakelov {

namespace {

int moebius(std::int64_t n) {
  int mu = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

// Multiply by (x^m - 1) in place.
void mul_xm_minus_1(IntPoly& p, std::int64_t m) {
  const std::size_t shift = static_cast<std::size_t>(m);
  IntPoly out(p.size() + shift, BigInt(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + shift] += p[i];
    out[i] -= p[i];
  }
  p = std::move(out);
}

// Exact division by (x^m - 1).
void div_xm_minus_1(IntPoly& p, std::int64_t m) {
  const std::size_t shift = static_cast<std::size_t>(m);
  // p = q (x^m - 1): q_i = q_{i-m} - p_i, read from the bottom.
  IntPoly q(p.size() - shift, BigInt(0));
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = (i >= shift ? q[i - shift] : BigInt(0)) - p[i];
  p = std::move(q);
}

}  // namespace

IntPoly cyclotomic_polynomial(std::int64_t n) {
  if (n < 1) throw DomainError("cyclotomic_polynomial: n must be positive");
  IntPoly p{BigInt(1)};
  std::vector<std::int64_t> divisors;
  for (std::int64_t m = 1; m <= n; ++m)
    if (n % m == 0) divisors.push_back(m);
  for (std::int64_t m : divisors)
    if (moebius(n / m) == 1) mul_xm_minus_1(p, m);
  for (std::int64_t m : divisors)
    if (moebius(n / m) == -1) div_xm_minus_1(p, m);
  return p;
}

std::vector<std::int64_t> orders_with_totient_at_most(std::int64_t bound) {
  std::vector<std::int64_t> out;
  const std::int64_t cover = 2 * bound * bound + 6;
  for (std::int64_t n = 1; n <= cover; ++n)
    if (euler_phi(n) <= bound) out.push_back(n);
  return out;
}

bool is_cyclotomic(const PrimitivePolynomial& f) {
  const int d = f.degree();
  if (f.leading() != 1) return false;
  if (abs(f.constant_term()) != 1) return false;
  // All roots on the unit circle bound each coefficient by a binomial.
  for (int k = 0; k <= d; ++k) {
    BigInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
    if (abs(f.coeffs()[k]) > binom) return false;
  }

  IntPoly rest = f.int_poly();
  for (std::int64_t n : orders_with_totient_at_most(d)) {
    if (static_cast<int>(rest.size()) - 1 < euler_phi(n)) continue;
    IntPoly phi = cyclotomic_polynomial(n);
    auto [quot, rem] = poly::divmod_monic(rest, phi);
    if (rem.empty()) {
      rest = std::move(quot);
      if (rest.size() == 1) return true;
    }
  }
  return false;
}

}  // namespace arakelov
