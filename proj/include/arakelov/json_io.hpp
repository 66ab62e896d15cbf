#pragma once

#include <json.hpp>
#include <string>

#include "arakelov/bounds.hpp"
#include "arakelov/fekete.hpp"
#include "arakelov/heights.hpp"
#include "arakelov/padic.hpp"

namespace arakelov {

using Json = nlohmann::ordered_json;

struct OutputStyle {
  int digits = 10;
  bool bits = false;  // log-valued quantities in bits instead of nats

  double log_value(double nats) const;
};

/// x rounded for printing: `digits` decimals, or `digits` significant
/// digits when |x| < 1e-3.
double present(double x, int digits);
/// printf-style fixed notation.
std::string fixed(double x, int digits);

Json big_int_json(const BigInt& n);
Json polynomial_json(const PrimitivePolynomial& f);
/// Accepts {"coeffs": [...]} with integers or decimal strings.
PrimitivePolynomial polynomial_from_json(const Json& j);

Json to_json(const LocalEnergy& e, const OutputStyle& style);
Json to_json(const HeightReport& r, const OutputStyle& style);
Json to_json(const QuadratureResult& q, const OutputStyle& style);
Json to_json(const BoundResult& b, const OutputStyle& style);
Json to_json(const PointConfiguration& c, const OutputStyle& style);
Json to_json(const NewtonPolygonResult& n);
Json to_json(const PadicRootCount& c);

}  // namespace arakelov
