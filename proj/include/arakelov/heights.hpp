#pragma once

// Arakelov and Weil heights of algebraic points on P^1, and the local energy
// sums D_v whose half-sum over all places recovers the Arakelov height.
//
// Finite places are handled exactly. For primitive squarefree f of degree d,
// factor disc(f) = a_d^{2d-2} prod_{i != j} (r_i - r_j) and use
//   -log delta_p(r_i, r_j) = -log|r_i - r_j|_p + log+|r_i|_p + log+|r_j|_p
// together with the Gauss lemma sum_i log+|r_i|_p = v_p(a_d) log p. The
// a_d terms cancel and
//   D_p = v_p(disc f) log p / (d (d - 1)),
// so D_p vanishes for every p not dividing the discriminant. Likewise the
// finite-place part of d * h_Ar collapses to log a_d. The archimedean place
// uses certified complex roots.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arakelov/kernels.hpp"
#include "arakelov/polynomial.hpp"
#include "arakelov/roots.hpp"

namespace arakelov {

class Place {
 public:
  static Place archimedean() { return Place(); }
  static Place finite(BigInt p);
  static Place finite(std::int64_t p) { return finite(BigInt(static_cast<long>(p))); }

  bool is_archimedean() const { return !prime_; }
  const BigInt& prime() const { return *prime_; }
  /// "inf" or the decimal prime.
  std::string label() const;

  friend bool operator==(const Place&, const Place&) = default;

 private:
  Place() = default;
  std::optional<BigInt> prime_;
};

enum class EnergyMethod { ExactValuation, NumericRoots };
std::string method_name(EnergyMethod m);

struct LocalEnergy {
  Place place = Place::archimedean();
  double value = 0.0;  // nats
  EnergyMethod method = EnergyMethod::NumericRoots;
  double error_bound = 0.0;
};

struct HeightEstimate {
  double value = 0.0;
  double error_bound = 0.0;
};

struct HeightReport {
  int degree = 0;
  double h_arakelov = 0.0;
  double h_weil = 0.0;
  double error_bound = 0.0;
  std::vector<LocalEnergy> locals;  // inf first, then ascending primes
  std::optional<double> crosscheck_residual;
  double crosscheck_bound = 0.0;
  std::vector<std::string> flags;

  bool has_flag(std::string_view flag) const;
};

/// log|n| for a nonzero big integer, without overflow.
double log_abs(const BigInt& n);

/// D_inf from certified roots, with the error propagated from the radii.
LocalEnergy arch_energy_sum(const CertifiedComplexRoots& roots, Exec exec = Exec::Parallel);
LocalEnergy arch_energy_sum(const PrimitivePolynomial& f, double tol = kDefaultRootTolerance,
                            Exec exec = Exec::Parallel);

/// D_p = v_p(disc f) log p / (d (d - 1)). Requires d >= 2 and p prime.
LocalEnergy nonarch_energy_sum(const PrimitivePolynomial& f, const BigInt& p);
LocalEnergy nonarch_energy_sum(const PrimitivePolynomial& f, std::int64_t p);

HeightEstimate arakelov_height_estimate(const AlgebraicPoint& point, double tol = kDefaultRootTolerance);
HeightEstimate weil_height_estimate(const AlgebraicPoint& point, double tol = kDefaultRootTolerance);
double arakelov_height(const AlgebraicPoint& point, double tol = kDefaultRootTolerance);
double weil_height(const AlgebraicPoint& point, double tol = kDefaultRootTolerance);

/// Both heights, every nonzero D_v, the residual |h_Ar - (1/2) sum_v D_v|
/// (degree >= 2), and flags: root-of-unity, irreducibility-unverified,
/// zero-point, infinity-point, unfactored-discriminant-part:<n>.
HeightReport height_report(const AlgebraicPoint& point, double tol = kDefaultRootTolerance,
                           Exec exec = Exec::Parallel);

/// height_report over a batch, one point per task. Exceptions are rethrown
/// for the first failing index.
std::vector<HeightReport> height_reports(std::span<const AlgebraicPoint> points,
                                         double tol = kDefaultRootTolerance, Exec exec = Exec::Parallel);

}  // namespace arakelov
