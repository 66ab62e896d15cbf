#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "arakelov/polynomial.hpp"

namespace arakelov {

using Rational = boost::rational<std::int64_t>;

/// Roots of a given p-adic valuation, read off one edge of the Newton polygon.
struct NewtonSegment {
  Rational valuation;  // v_p(root) = -slope
  int multiplicity;    // horizontal length of the edge
};

struct NewtonPolygonResult {
  std::int64_t prime = 0;
  std::vector<NewtonSegment> segments;  // ascending slope, i.e. descending valuation
  int zero_roots = 0;                   // roots equal to 0 (a_0 = 0); infinite valuation

  int total_multiplicity() const;
  /// Sum of valuation x multiplicity over the finite-valuation roots.
  Rational valuation_sum() const;
  /// Sum over roots of max(0, -v_p(root)); equals v_p(a_d) for primitive f.
  Rational negative_part_sum() const;
};

/// Lower convex hull of {(i, v_p(a_i)) : a_i != 0}.
NewtonPolygonResult newton_polygon(const PrimitivePolynomial& f, std::int64_t p);

enum class RootCountStatus { Certified, Inconclusive };

struct PadicRootCount {
  std::int64_t prime = 0;
  int precision_exponent = 0;
  int count = 0;
  RootCountStatus status = RootCountStatus::Certified;

  bool certified() const { return status == RootCountStatus::Certified; }
  std::string status_name() const { return certified() ? "certified" : "inconclusive"; }
};

inline constexpr int kDefaultPadicPrecision = 40;

/// Number of roots of f lying in Q_p. Roots in Z_p are found by enumerating
/// residues mod p and branching on x = a + p*y until each branch either
/// carries a simple root mod p (Hensel) or has no root; roots of negative
/// valuation are counted through the reversed polynomial. Branches still
/// open after `precision_exponent` levels make the count inconclusive.
///
/// Residue enumeration is linear in p; p must be prime and below 2^31.
PadicRootCount p_adic_root_count(const PrimitivePolynomial& f, std::int64_t p,
                                 int precision_exponent = kDefaultPadicPrecision);

}  // namespace arakelov
