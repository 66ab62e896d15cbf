#include "arakelov/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numbers>

#include "arakelov/errors.hpp"

namespace arakelov {

double OutputStyle::log_value(double nats) const { return bits ? nats / std::numbers::ln2 : nats; }

double present(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[64];
  if (std::abs(x) >= 1e-3) {
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  } else {
    std::snprintf(buf, sizeof buf, "%.*e", std::max(digits - 1, 0), x);
  }
  return std::strtod(buf, nullptr);
}

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

Json big_int_json(const BigInt& n) {
  if (n.fits_slong_p()) return Json(n.get_si());
  return Json(n.get_str());
}

Json polynomial_json(const PrimitivePolynomial& f) {
  Json coeffs = Json::array();
  for (const BigInt& c : f.coeffs()) coeffs.push_back(big_int_json(c));
  return Json{{"coeffs", coeffs}};
}

PrimitivePolynomial polynomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw ParseError("expected {\"coeffs\": [...]}");
  }
  std::vector<BigInt> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (c.is_number_integer()) {
      coeffs.emplace_back(static_cast<long>(c.get<std::int64_t>()));
    } else if (c.is_string()) {
      BigInt v;
      if (v.set_str(c.get<std::string>(), 10) != 0) throw ParseError("bad integer '" + c.get<std::string>() + "'");
      coeffs.push_back(v);
    } else {
      throw ParseError("coefficients must be integers");
    }
  }
  return PrimitivePolynomial::from_coefficients(std::move(coeffs));
}

Json to_json(const LocalEnergy& e, const OutputStyle& style) {
  Json place = e.place.is_archimedean() ? Json("inf") : big_int_json(e.place.prime());
  return Json{{"place", place},
              {"value", present(style.log_value(e.value), style.digits)},
              {"method", method_name(e.method)},
              {"error_bound", present(style.log_value(e.error_bound), style.digits)}};
}

Json to_json(const HeightReport& r, const OutputStyle& style) {
  Json locals = Json::array();
  for (const auto& e : r.locals) locals.push_back(to_json(e, style));
  Json residual = nullptr;
  if (r.crosscheck_residual) residual = present(style.log_value(*r.crosscheck_residual), style.digits);
  return Json{{"units", style.bits ? "bits" : "nats"},
              {"degree", r.degree},
              {"h_arakelov", present(style.log_value(r.h_arakelov), style.digits)},
              {"h_weil", present(style.log_value(r.h_weil), style.digits)},
              {"error_bound", present(style.log_value(r.error_bound), style.digits)},
              {"locals", locals},
              {"crosscheck_residual", residual},
              {"crosscheck_bound", present(style.log_value(r.crosscheck_bound), style.digits)},
              {"flags", r.flags}};
}

Json to_json(const QuadratureResult& q, const OutputStyle& style) {
  return Json{{"value", present(q.value, style.digits)},
              {"est_error", present(q.est_error, style.digits)},
              {"evaluations", q.evaluations}};
}

Json to_json(const BoundResult& b, const OutputStyle& style) {
  Json terms = Json::object();
  Json symbolic = Json::array({b.base_symbolic});
  for (const auto& t : b.terms) {
    terms[std::to_string(t.prime)] = present(style.log_value(t.value), style.digits);
    symbolic.push_back(t.symbolic);
  }
  return Json{{"bound", present(style.log_value(b.value), style.digits)},
              {"base", base_name(b.base)},
              {"base_value", present(style.log_value(b.base_value), style.digits)},
              {"r", b.r ? Json(*b.r) : Json(nullptr)},
              {"terms", terms},
              {"symbolic", symbolic},
              {"beats_elementary", b.beats_elementary}};
}

Json to_json(const PointConfiguration& c, const OutputStyle& style) {
  Json params = Json::array();
  for (double p : c.params) params.push_back(present(p, std::max(style.digits, 15)));
  Json out{{"set", c.set.name()}};
  if (c.set.kind() == TargetSet::Kind::Interval) out["r"] = c.set.radius();
  out["n"] = c.n();
  out["params"] = params;
  out["energy"] = present(c.energy, style.digits);
  out["iterations"] = c.iterations;
  out["status"] = status_name(c.status);
  out["gradient_norm"] = present(c.gradient_norm, 3);
  return out;
}

Json to_json(const NewtonPolygonResult& n) {
  Json segs = Json::array();
  for (const auto& s : n.segments) {
    const std::string v = s.valuation.denominator() == 1
                              ? std::to_string(s.valuation.numerator())
                              : std::to_string(s.valuation.numerator()) + "/" + std::to_string(s.valuation.denominator());
    segs.push_back(Json{{"valuation", v}, {"multiplicity", s.multiplicity}});
  }
  return Json{{"prime", n.prime}, {"segments", segs}, {"zero_roots", n.zero_roots}};
}

Json to_json(const PadicRootCount& c) {
  return Json{{"prime", c.prime},
              {"precision_exponent", c.precision_exponent},
              {"count", c.count},
              {"status", c.status_name()}};
}

}  // namespace arakelov
