#include <doctest.h>

#include <cmath>

#include "arakelov/corpus.hpp"
#include "arakelov/cyclotomic.hpp"
#include "arakelov/number_theory.hpp"
#include "arakelov/roots.hpp"

using namespace arakelov;

TEST_CASE("examples") {
  CHECK(is_cyclotomic(PrimitivePolynomial::from_coefficients({1, 1, 1})));
  CHECK(is_cyclotomic(PrimitivePolynomial::from_coefficients({-1, 1})));
  CHECK_FALSE(is_cyclotomic(PrimitivePolynomial::from_coefficients({-2, 0, 1})));
  CHECK_FALSE(is_cyclotomic(PrimitivePolynomial::from_coefficients({-1, -1, 1})));
  // Products of distinct cyclotomic factors still have only roots of unity.
  CHECK(is_cyclotomic(PrimitivePolynomial::from_coefficients({-1, 0, 1})));
  CHECK(is_cyclotomic(PrimitivePolynomial::from_coefficients({-1, 0, 0, 0, 0, 0, 1})));
  // Lehmer's polynomial is reciprocal with unit constant term but not cyclotomic.
  CHECK_FALSE(is_cyclotomic(PrimitivePolynomial::from_coefficients({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1})));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == IntPoly{-1, 1});
  CHECK(cyclotomic_polynomial(6) == IntPoly{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == IntPoly{1, 0, -1, 0, 1});
  // Phi_105 is the first with a coefficient of absolute value 2.
  const IntPoly p105 = cyclotomic_polynomial(105);
  CHECK(p105.size() == 49);
  CHECK(p105[7] == -2);

  for (std::int64_t n : orders_with_totient_at_most(20)) {
    const IntPoly phi = cyclotomic_polynomial(n);
    CHECK(static_cast<std::int64_t>(phi.size()) - 1 == euler_phi(n));
    // x^n - 1 divisible by Phi_n.
    IntPoly xn(static_cast<std::size_t>(n) + 1, BigInt(0));
    xn[0] = -1;
    xn[n] = 1;
    CHECK(poly::divmod_monic(xn, phi).second.empty());
    const auto f = PrimitivePolynomial::from_coefficients(phi);
    CHECK(is_cyclotomic(f));
    for (auto z : complex_roots(f).roots) CHECK(std::abs(std::abs(z) - 1.0) <= 1e-9);
  }
}

TEST_CASE("orders with totient bound") {
  const auto orders = orders_with_totient_at_most(2);
  CHECK(orders == std::vector<std::int64_t>{1, 2, 3, 4, 6});
  CHECK(orders_with_totient_at_most(20).size() == 41);
}

TEST_CASE("numeric cross-check on a random corpus") {
  for (const auto& f : random_corpus(1000, 41)) {
    if (!is_cyclotomic(f)) continue;
    for (auto z : complex_roots(f).roots) CHECK(std::abs(std::abs(z) - 1.0) <= 1e-9);
  }
}
