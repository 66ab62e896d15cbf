#pragma once

#include <complex>
#include <vector>

#include "arakelov/polynomial.hpp"

namespace arakelov {

inline constexpr double kDefaultRootTolerance = 1e-12;

/// All complex roots of a squarefree polynomial with certified inclusion
/// radii: the disk of radius radius[i] about roots[i] contains exactly one
/// root, and the disks are pairwise disjoint.
struct CertifiedComplexRoots {
  std::vector<std::complex<double>> roots;
  std::vector<double> radius;
  int sweeps = 0;

  double max_radius() const;
};

/// Aberth-Ehrlich simultaneous iteration in extended precision, started on
/// the Cauchy-bound circle. Certification uses the Weierstrass-correction
/// inclusion theorem (disk radius d * |W_i|) with a rounding allowance for
/// the residual evaluation.
///
/// Throws NumericError if the 200-sweep budget runs out, a radius exceeds
/// `tol`, or the inclusion disks overlap.
CertifiedComplexRoots complex_roots(const PrimitivePolynomial& f, double tol = kDefaultRootTolerance);

}  // namespace arakelov
