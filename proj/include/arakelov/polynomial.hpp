#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace arakelov {

using BigInt = mpz_class;

/// Dense integer polynomial, coefficients ascending by degree. No invariants;
/// used for intermediate results (derivatives, shifts, quotients).
using IntPoly = std::vector<BigInt>;

/// What normalization did to the input coefficients.
struct NormalizationNotes {
  BigInt content_removed{1};
  bool sign_flipped = false;

  bool changed() const { return content_removed != 1 || sign_flipped; }
  std::vector<std::string> messages() const;
};

/// Minimal-polynomial presentation of an algebraic point: primitive,
/// positive leading coefficient, degree >= 1, squarefree.
///
/// Irreducibility is not checked. A reducible squarefree polynomial stands
/// for the Galois-stable multiset of its roots.
class PrimitivePolynomial {
 public:
  /// Divides out the content and flips the sign so that a_d > 0.
  /// Throws DomainError for the zero polynomial, constants, and inputs with
  /// a repeated root.
  static PrimitivePolynomial from_coefficients(std::vector<BigInt> coeffs,
                                               NormalizationNotes* notes = nullptr);
  static PrimitivePolynomial from_coefficients(std::initializer_list<long> coeffs,
                                               NormalizationNotes* notes = nullptr);

  std::span<const BigInt> coeffs() const { return coeffs_; }
  const IntPoly& int_poly() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& leading() const { return coeffs_.back(); }
  const BigInt& constant_term() const { return coeffs_.front(); }

  /// The polynomial "x", which presents the point 0.
  bool is_x() const { return degree() == 1 && coeffs_[0] == 0 && coeffs_[1] == 1; }

  std::string to_string() const;

  friend bool operator==(const PrimitivePolynomial&, const PrimitivePolynomial&) = default;

 private:
  explicit PrimitivePolynomial(IntPoly coeffs) : coeffs_(std::move(coeffs)) {}
  IntPoly coeffs_;
};

struct ParsedPolynomial {
  PrimitivePolynomial poly;
  NormalizationNotes notes;
};

/// Grammar: terms `[+-] [coef] [x [^ exp]]`, whitespace ignored, an optional
/// `*` between coefficient and `x`. Like terms are combined.
ParsedPolynomial parse_polynomial(std::string_view text);

/// Exact discriminant a_d^{2d-2} prod_{i<j} (r_i - r_j)^2 via the Sylvester
/// resultant of f and f'. Degree 1 returns 1 by convention.
BigInt discriminant(const PrimitivePolynomial& f);

/// Minimal polynomial of 1/alpha. Throws DomainError when a_0 = 0.
PrimitivePolynomial reverse(const PrimitivePolynomial& f);

/// f(-x), renormalized.
PrimitivePolynomial negate_variable(const PrimitivePolynomial& f);

struct InfinityPoint {
  friend bool operator==(InfinityPoint, InfinityPoint) = default;
};

/// A point of P^1 over the algebraic numbers: a finite point given by its
/// polynomial (the polynomial "x" is the point 0), or infinity.
class AlgebraicPoint {
 public:
  AlgebraicPoint(PrimitivePolynomial f) : value_(std::move(f)) {}
  static AlgebraicPoint infinity() { return AlgebraicPoint(InfinityPoint{}); }
  static AlgebraicPoint zero();

  /// Accepts "inf", "infinity", "0", or polynomial text.
  static AlgebraicPoint parse(std::string_view text);

  bool is_infinity() const { return std::holds_alternative<InfinityPoint>(value_); }
  bool is_zero() const { return !is_infinity() && polynomial().is_x(); }
  const PrimitivePolynomial& polynomial() const { return std::get<PrimitivePolynomial>(value_); }

 private:
  explicit AlgebraicPoint(InfinityPoint p) : value_(p) {}
  std::variant<PrimitivePolynomial, InfinityPoint> value_;
};

namespace poly {

void trim(IntPoly& p);
IntPoly derivative(const IntPoly& p);
BigInt evaluate(const IntPoly& p, const BigInt& x);
BigInt content(const IntPoly& p);
/// p(x + a).
IntPoly taylor_shift(const IntPoly& p, const BigInt& a);
/// Quotient and remainder by a monic divisor; both exact over Z.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& p, const IntPoly& monic);
IntPoly multiply(const IntPoly& a, const IntPoly& b);
/// Resultant via fraction-free (Bareiss) elimination of the Sylvester matrix.
BigInt resultant(const IntPoly& f, const IntPoly& g);

}  // namespace poly

}  // namespace arakelov
