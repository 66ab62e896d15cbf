#include <doctest.h>

#include <random>

#include "arakelov/corpus.hpp"
#include "arakelov/errors.hpp"
#include "arakelov/polynomial.hpp"

using namespace arakelov;

namespace {

std::vector<long> as_longs(const PrimitivePolynomial& f) {
  std::vector<long> out;
  for (const auto& c : f.coeffs()) out.push_back(c.get_si());
  return out;
}

}  // namespace

TEST_CASE("parse examples") {
  CHECK(as_longs(parse_polynomial("x^2 - 2").poly) == std::vector<long>{-2, 0, 1});

  const auto neg = parse_polynomial("-x + 1");
  CHECK(as_longs(neg.poly) == std::vector<long>{-1, 1});
  CHECK(neg.notes.sign_flipped);

  const auto scaled = parse_polynomial("2x^2 - 4");
  CHECK(as_longs(scaled.poly) == std::vector<long>{-2, 0, 1});
  CHECK(scaled.notes.content_removed == 2);
  CHECK(scaled.notes.messages().size() == 1);
}

TEST_CASE("parse grammar") {
  CHECK(as_longs(parse_polynomial(" 3 * x ^ 2 + x^2 - x - 1 ").poly) == std::vector<long>{-1, -1, 4});
  CHECK(as_longs(parse_polynomial("x").poly) == std::vector<long>{0, 1});
  CHECK(as_longs(parse_polynomial("-7 + x^3").poly) == std::vector<long>{-7, 0, 0, 1});
  CHECK(as_longs(parse_polynomial("+x^2+x+1").poly) == std::vector<long>{1, 1, 1});
  CHECK(parse_polynomial("123456789012345678901234567890x - 1").poly.leading() ==
        BigInt("123456789012345678901234567890"));

  CHECK_THROWS_AS(parse_polynomial(""), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^2 x"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("y + 1"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("0"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("5"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("2x - 2x"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^2 - 2x + 1"), DomainError);
}

TEST_CASE("normalization invariants") {
  const auto corpus = random_corpus(300, 11);
  for (const auto& f : corpus) {
    CHECK(f.leading() > 0);
    BigInt g = 0;
    for (const auto& c : f.coeffs()) g = gcd(g, c);
    CHECK(g == 1);
    CHECK(discriminant(f) != 0);
  }
}

TEST_CASE("discriminant against closed forms") {
  CHECK(discriminant(PrimitivePolynomial::from_coefficients({-2, 0, 1})) == 8);
  CHECK(discriminant(PrimitivePolynomial::from_coefficients({-1, -1, 1})) == 5);
  CHECK(discriminant(PrimitivePolynomial::from_coefficients({-1, 1})) == 1);

  std::mt19937_64 eng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const long a = uniform_int(eng, 1, 40), b = uniform_int(eng, -40, 40), c = uniform_int(eng, -40, 40),
               d = uniform_int(eng, -40, 40);
    std::vector<BigInt> q{BigInt(c), BigInt(b), BigInt(a)};
    const BigInt quad = BigInt(b) * b - BigInt(4) * a * c;
    if (quad != 0 && gcd(gcd(BigInt(a), BigInt(b)), BigInt(c)) == 1) {
      CHECK(discriminant(PrimitivePolynomial::from_coefficients(q)) == quad);
    }
    // a x^3 + b x^2 + c x + d
    const BigInt A(a), B(b), C(c), D(d);
    const BigInt cubic = B * B * C * C - 4 * A * C * C * C - 4 * B * B * B * D - 27 * A * A * D * D + 18 * A * B * C * D;
    if (cubic != 0 && gcd(gcd(A, B), gcd(C, D)) == 1) {
      CHECK(discriminant(PrimitivePolynomial::from_coefficients({D, C, B, A})) == cubic);
    }
  }
}

TEST_CASE("reverse") {
  CHECK(as_longs(reverse(PrimitivePolynomial::from_coefficients({-2, 0, 1}))) == std::vector<long>{-1, 0, 2});
  CHECK(as_longs(reverse(PrimitivePolynomial::from_coefficients({-1, 1}))) == std::vector<long>{-1, 1});
  CHECK(as_longs(reverse(PrimitivePolynomial::from_coefficients({-1, -1, 1}))) == std::vector<long>{-1, 1, 1});
  CHECK_THROWS_AS(reverse(PrimitivePolynomial::from_coefficients({0, 1})), DomainError);

  for (const auto& f : random_corpus(300, 12)) CHECK(reverse(reverse(f)) == f);
}

TEST_CASE("negate_variable") {
  CHECK(as_longs(negate_variable(PrimitivePolynomial::from_coefficients({-2, 1}))) == std::vector<long>{2, 1});
  CHECK(as_longs(negate_variable(PrimitivePolynomial::from_coefficients({1, 0, 0, 1}))) ==
        std::vector<long>{-1, 0, 0, 1});
  for (const auto& f : random_corpus(100, 13)) CHECK(negate_variable(negate_variable(f)) == f);
}

TEST_CASE("to_string") {
  CHECK(PrimitivePolynomial::from_coefficients({-1, 0, 2}).to_string() == "2x^2 - 1");
  CHECK(PrimitivePolynomial::from_coefficients({1, -1, 1}).to_string() == "x^2 - x + 1");
  CHECK(PrimitivePolynomial::from_coefficients({0, 1}).to_string() == "x");
}

TEST_CASE("algebraic points") {
  CHECK(AlgebraicPoint::parse("inf").is_infinity());
  CHECK(AlgebraicPoint::parse(" Infinity ").is_infinity());
  CHECK(AlgebraicPoint::parse("0").is_zero());
  CHECK(AlgebraicPoint::zero().is_zero());
  CHECK(as_longs(AlgebraicPoint::parse("3").polynomial()) == std::vector<long>{-3, 1});
  CHECK(as_longs(AlgebraicPoint::parse("-2/4").polynomial()) == std::vector<long>{1, 2});
  CHECK(as_longs(AlgebraicPoint::parse("x^2+1").polynomial()) == std::vector<long>{1, 0, 1});
  CHECK_THROWS_AS(AlgebraicPoint::parse("1/0"), ParseError);
}

TEST_CASE("poly helpers") {
  const IntPoly f{BigInt(-2), BigInt(0), BigInt(1)};
  CHECK(poly::evaluate(f, BigInt(3)) == 7);
  CHECK(poly::derivative(f) == IntPoly{BigInt(0), BigInt(2)});
  const IntPoly shifted = poly::taylor_shift(f, BigInt(1));  // (x+1)^2 - 2
  CHECK(shifted == IntPoly{BigInt(-1), BigInt(2), BigInt(1)});
  const auto [q, r] = poly::divmod_monic(IntPoly{BigInt(-1), BigInt(0), BigInt(0), BigInt(1)},
                                         IntPoly{BigInt(-1), BigInt(1)});
  CHECK(q == IntPoly{BigInt(1), BigInt(1), BigInt(1)});
  CHECK(r.empty());
  CHECK(poly::multiply(IntPoly{BigInt(1), BigInt(1)}, IntPoly{BigInt(-1), BigInt(1)}) ==
        IntPoly{BigInt(-1), BigInt(0), BigInt(1)});
  // Res(x - a, g) = g(a)
  CHECK(poly::resultant(IntPoly{BigInt(-3), BigInt(1)}, f) == 7);
}
