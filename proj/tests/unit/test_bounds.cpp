#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "arakelov/bounds.hpp"
#include "arakelov/equilibrium.hpp"
#include "arakelov/errors.hpp"

using namespace arakelov;

namespace {

const double kHalfLog2 = 0.5 * std::log(2.0);

std::string six(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

bool naive_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

double raw_term(double p) { return p * std::log(p) / (p * p - 1); }

}  // namespace

TEST_CASE("nonarch term") {
  CHECK(nonarch_term(2) == doctest::Approx(0.4620981204).epsilon(1e-10));
  CHECK(nonarch_term(3) == doctest::Approx(3 * std::log(3.0) / 8).epsilon(1e-15));
  CHECK(nonarch_term(3) == doctest::Approx(0.4119796083).epsilon(1e-10));
  double prev = nonarch_term(3);
  for (std::int64_t p : {5, 7, 11, 101, 1009, 10007}) {
    CHECK(nonarch_term(p) < prev);
    prev = nonarch_term(p);
  }
  CHECK(nonarch_term(1000003) < 1e-4);
  CHECK_THROWS_AS(nonarch_term(1), DomainError);
  CHECK_THROWS_AS(nonarch_term(9), DomainError);
}

TEST_CASE("lower bound examples") {
  const auto empty = lower_bound(PlaceSet{});
  CHECK(empty.value == 0.25);
  CHECK_FALSE(empty.beats_elementary);
  CHECK(base_name(empty.base) == "quarter");

  const auto ex1 = lower_bound(PlaceSet::parse("inf,2"));
  CHECK(six(ex1.value) == "0.577623");
  CHECK(six(ex1.base_value) == "0.346574");
  REQUIRE(ex1.terms.size() == 1);
  CHECK(six(ex1.terms[0].value) == "0.231049");
  CHECK(ex1.beats_elementary);

  const auto s17 = lower_bound(PlaceSet::parse("17"));
  CHECK(s17.value == doctest::Approx(0.25 + 0.5 * 17 * std::log(17.0) / 288).epsilon(1e-15));
  CHECK(s17.value == doctest::Approx(0.3336).epsilon(1e-3));
  CHECK_FALSE(s17.beats_elementary);
}

TEST_CASE("interval bound examples") {
  const auto ex2 = lower_bound_interval(PlaceSet::parse("inf,2"), 2);
  CHECK(six(ex2.value) == "0.633409");
  CHECK(six(ex2.base_value) == "0.402359");
  CHECK(ex2.r == 2.0);
  CHECK(base_name(ex2.base) == "interval");
  const auto ex3 = lower_bound_interval(PlaceSet::parse("inf"), 2);
  CHECK(six(ex3.value) == "0.402359");
  CHECK_THROWS_AS(lower_bound_interval(PlaceSet::parse("2"), 2), DomainError);
  CHECK_THROWS_AS(lower_bound_interval(PlaceSet::parse("inf"), 0), DomainError);
}

TEST_CASE("additivity and monotonicity") {
  const double eps = std::numeric_limits<double>::epsilon();
  for (const char* base : {"", "inf", "inf,3", "5,7"}) {
    const PlaceSet s = PlaceSet::parse(base);
    const double v = lower_bound(s).value;
    for (std::int64_t p : {2, 11, 13, 17, 97}) {
      if (s.contains(p)) continue;
      const double w = lower_bound(s.with_prime(p)).value;
      CHECK(std::abs((w - v) - 0.5 * nonarch_term(p)) <= 4 * eps * w);
      CHECK(w > v);
    }
  }
  CHECK(lower_bound(PlaceSet::parse("inf")).value > lower_bound(PlaceSet{}).value);

  const PlaceSet s = PlaceSet::parse("inf,3");
  double prev = INFINITY;
  for (double r : {0.1, 0.5, 1.0, 2.0, 10.0, 1e3}) {
    const double v = lower_bound_interval(s, r).value;
    CHECK(v < prev);
    prev = v;
  }
  const double target = lower_bound(s).value;
  CHECK(std::abs(lower_bound_interval(s, 1e2).value - target) <= 1e-4);
  CHECK(std::abs(lower_bound_interval(s, 1e4).value - target) <= 1e-8);
  CHECK(std::abs(lower_bound_interval(s, 1e6).value - target) <= 1e-12);
}

TEST_CASE("interval base matches the equilibrium energy") {
  for (double r : {0.5, 1.0, 2.0, 5.0}) {
    const double base = lower_bound_interval(PlaceSet::parse("inf"), r).base_value;
    CHECK(std::abs(base - 0.5 * analytic_energy(TargetSet::interval(r))) <= 1e-9);
    CHECK(std::abs(base - 0.5 * energy(TargetSet::interval(r)).value) <= 1e-5);
  }
}

TEST_CASE("single place beaters") {
  CHECK(single_place_beaters() == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13});
  // Oracle: direct scan with the raw formula well past the cutoff.
  std::vector<std::int64_t> brute;
  for (long p = 2; p < 5000; ++p)
    if (naive_prime(p) && 0.25 + 0.5 * raw_term(p) > kHalfLog2) brute.push_back(p);
  CHECK(brute == single_place_beaters());
  // {inf, p} always beats.
  for (long p = 2; p < 2000; ++p)
    if (naive_prime(p)) CHECK(lower_bound(PlaceSet(true, {p})).beats_elementary);
}

TEST_CASE("beating pairs") {
  const auto census = count_beating_pairs();
  CHECK(census.count() == 82);
  CHECK(census.always_beat == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13});
  CHECK(census.cutoff == 199);

  std::vector<std::pair<std::int64_t, std::int64_t>> brute;
  std::vector<long> primes;
  for (long p = 17; p < 3000; ++p)
    if (naive_prime(p)) primes.push_back(p);
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j)
      if (0.25 + 0.5 * (raw_term(primes[i]) + raw_term(primes[j])) > kHalfLog2) brute.emplace_back(primes[i], primes[j]);
  CHECK(brute == census.witnesses);
  for (auto [p, q] : census.witnesses) CHECK(lower_bound(PlaceSet(false, {p, q})).beats_elementary);
  // Any pair with p <= 13 beats.
  for (std::int64_t p : census.always_beat) CHECK(lower_bound(PlaceSet(false, {p, 1999})).beats_elementary);
}

TEST_CASE("chebyshev integral") {
  const auto c = chebyshev_limit_integral();
  CHECK(std::abs(c.value - 0.481212) <= 1e-6);
  CHECK(c.value > lower_bound_interval(PlaceSet::parse("inf"), 2).value);
  CHECK(std::abs(c.value - green_interval(Complex(0, 1), 2)) <= 1e-6);
}

TEST_CASE("place sets") {
  CHECK(PlaceSet::parse("").label() == "{}");
  CHECK(PlaceSet::parse("3, inf ,2").label() == "inf,2,3");
  CHECK(PlaceSet::parse("inf,2").primes() == std::vector<std::int64_t>{2});
  CHECK_THROWS_AS(PlaceSet::parse("2,2"), DomainError);
  CHECK_THROWS_AS(PlaceSet::parse("4"), DomainError);
  CHECK_THROWS_AS(PlaceSet::parse("inf,,2"), ParseError);
  CHECK_THROWS_AS(PlaceSet::parse("two"), ParseError);
  CHECK_THROWS_AS(PlaceSet::parse("inf,inf"), DomainError);
}
