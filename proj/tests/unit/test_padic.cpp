#include <doctest.h>

#include "arakelov/corpus.hpp"
#include "arakelov/errors.hpp"
#include "arakelov/number_theory.hpp"
#include "arakelov/padic.hpp"

using namespace arakelov;

TEST_CASE("newton polygon examples") {
  const auto a = newton_polygon(PrimitivePolynomial::from_coefficients({-2, 0, 1}), 2);
  REQUIRE(a.segments.size() == 1);
  CHECK(a.segments[0].valuation == Rational(1, 2));
  CHECK(a.segments[0].multiplicity == 2);

  const auto b = newton_polygon(PrimitivePolynomial::from_coefficients({-1, -1, 1}), 5);
  REQUIRE(b.segments.size() == 1);
  CHECK(b.segments[0].valuation == Rational(0));
  CHECK(b.segments[0].multiplicity == 2);

  const auto c = newton_polygon(PrimitivePolynomial::from_coefficients({-1, 2}), 2);
  REQUIRE(c.segments.size() == 1);
  CHECK(c.segments[0].valuation == Rational(-1));
  CHECK(c.segments[0].multiplicity == 1);

  // 4x^3 + x - 8 at 2: points (0,3),(1,0),(3,2) give valuations 3 and -1, -1.
  const auto d = newton_polygon(PrimitivePolynomial::from_coefficients({-8, 1, 0, 4}), 2);
  REQUIRE(d.segments.size() == 2);
  CHECK(d.segments[0].valuation == Rational(3));
  CHECK(d.segments[0].multiplicity == 1);
  CHECK(d.segments[1].valuation == Rational(-1));
  CHECK(d.segments[1].multiplicity == 2);

  const auto z = newton_polygon(PrimitivePolynomial::from_coefficients({0, -3, 1}), 3);
  CHECK(z.zero_roots == 1);
  CHECK(z.total_multiplicity() == 2);

  CHECK_THROWS_AS(newton_polygon(PrimitivePolynomial::from_coefficients({-2, 0, 1}), 4), DomainError);
}

TEST_CASE("newton polygon identities on a random corpus") {
  const auto corpus = random_corpus(400, 31);
  for (const auto& f : corpus) {
    if (f.constant_term() == 0) continue;
    for (std::int64_t p : {2, 3, 5, 7, 11}) {
      const auto np = newton_polygon(f, p);
      CHECK(np.total_multiplicity() == f.degree());
      const long v0 = valuation(f.constant_term(), p), vd = valuation(f.leading(), p);
      CHECK(np.valuation_sum() == Rational(v0 - vd));
      CHECK(np.negative_part_sum() == Rational(vd));
      for (std::size_t k = 1; k < np.segments.size(); ++k)
        CHECK(np.segments[k - 1].valuation > np.segments[k].valuation);
    }
  }
}

TEST_CASE("p-adic root count examples") {
  const auto f = PrimitivePolynomial::from_coefficients({-2, 0, 1});
  const auto at7 = p_adic_root_count(f, 7);
  CHECK(at7.count == 2);
  CHECK(at7.certified());
  const auto at3 = p_adic_root_count(f, 3);
  CHECK(at3.count == 0);
  CHECK(at3.certified());
  const auto at2 = p_adic_root_count(f, 2);
  CHECK(at2.count == 0);
  CHECK(at2.certified());
  CHECK_THROWS_AS(p_adic_root_count(f, 9), DomainError);
}

TEST_CASE("p-adic root count against products of linear factors") {
  // (x - 1)(x - 3)(x - 5)(x^2 + 1): 3 rational roots, and i is in Q_5 but not Q_3 or Q_7.
  const auto g = PrimitivePolynomial::from_coefficients({-15, 23, -24, 24, -9, 1});
  CHECK(p_adic_root_count(g, 5).count == 5);
  CHECK(p_adic_root_count(g, 13).count == 5);
  CHECK(p_adic_root_count(g, 3).count == 3);
  CHECK(p_adic_root_count(g, 7).count == 3);
  // x^2 - 17 has roots in Q_2 (17 = 1 mod 8), x^2 - 5 does not.
  CHECK(p_adic_root_count(PrimitivePolynomial::from_coefficients({-17, 0, 1}), 2).count == 2);
  CHECK(p_adic_root_count(PrimitivePolynomial::from_coefficients({-5, 0, 1}), 2).count == 0);
}

TEST_CASE("certified count is stable in precision") {
  for (const auto& f : random_corpus(150, 32)) {
    for (std::int64_t p : {2, 3, 5}) {
      const auto lo = p_adic_root_count(f, p, 20);
      const auto hi = p_adic_root_count(f, p, 60);
      if (lo.certified()) {
        CHECK(hi.certified());
        CHECK(hi.count == lo.count);
      }
      CHECK(lo.count <= f.degree());
    }
  }
}
