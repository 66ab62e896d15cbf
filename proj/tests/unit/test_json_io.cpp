#include <doctest.h>

#include <cmath>

#include "arakelov/bounds.hpp"
#include "arakelov/errors.hpp"
#include "arakelov/fekete.hpp"
#include "arakelov/json_io.hpp"

using namespace arakelov;

TEST_CASE("present and fixed") {
  CHECK(present(0.34657359028, 10) == 0.3465735903);
  CHECK(present(1.23456e-7, 3) == 1.23e-7);
  CHECK(present(0.0, 10) == 0.0);
  CHECK(std::isinf(present(INFINITY, 4)));
  CHECK(fixed(0.5776226505, 6) == "0.577623");
  CHECK(fixed(-1.0, 2) == "-1.00");
  OutputStyle bits{10, true};
  CHECK(bits.log_value(std::log(2.0)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(OutputStyle{}.log_value(0.7) == 0.7);
}

TEST_CASE("big integers and polynomials round trip") {
  CHECK(big_int_json(BigInt(-42)) == Json(-42));
  const BigInt huge("123456789012345678901234567890");
  CHECK(big_int_json(huge) == Json("123456789012345678901234567890"));

  const auto f = PrimitivePolynomial::from_coefficients({BigInt(-1), BigInt(0), huge});
  CHECK(polynomial_from_json(polynomial_json(f)) == f);
  CHECK(polynomial_from_json(Json::parse(R"({"coeffs": [-2, 0, 1]})")) ==
        PrimitivePolynomial::from_coefficients({-2, 0, 1}));
  CHECK_THROWS_AS(polynomial_from_json(Json::parse("[1, 2]")), ParseError);
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"coeffs": [1.5, 2]})")), ParseError);
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"coeffs": ["x", 2]})")), ParseError);
}

TEST_CASE("report schemas") {
  const OutputStyle style;
  const auto rep = to_json(height_report(PrimitivePolynomial::from_coefficients({-2, 0, 1})), style);
  for (const char* key : {"h_arakelov", "h_weil", "locals", "crosscheck_residual", "flags"}) CHECK(rep.contains(key));
  CHECK(rep["locals"][0]["place"] == "inf");
  CHECK(rep["locals"][1]["place"] == 2);
  CHECK(rep["locals"][1]["method"] == "exact-valuation");
  CHECK(rep["h_arakelov"].get<double>() == 0.5493061443);

  const auto linear = to_json(height_report(PrimitivePolynomial::from_coefficients({-1, 1})), style);
  CHECK(linear["crosscheck_residual"].is_null());

  const auto b = to_json(lower_bound_interval(PlaceSet::parse("inf,2"), 2), style);
  CHECK(b["bound"].get<double>() == 0.6334085383);
  CHECK(b["base"] == "interval");
  CHECK(b["r"].get<double>() == 2.0);
  CHECK(b["terms"]["2"].get<double>() == 0.2310490602);
  CHECK(b["beats_elementary"] == true);
  CHECK(to_json(lower_bound(PlaceSet{}), style)["r"].is_null());

  const auto q = to_json(QuadratureResult{1.0, 1e-12, 77}, style);
  CHECK(q["value"] == 1.0);
  CHECK(q["evaluations"] == 77);

  const auto cfg = to_json(minimize(TargetSet::real_line(), 4, 0), style);
  CHECK(cfg["set"] == "real-line");
  CHECK(cfg["n"] == 4);
  CHECK(cfg["params"].size() == 4);
  CHECK(cfg.contains("energy"));
}
