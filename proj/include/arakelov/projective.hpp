#pragma once

#include <complex>

namespace arakelov {

using Complex = std::complex<double>;

/// Homogeneous coordinates (x0 : x1) on P^1(C). The affine point z is (z : 1)
/// and infinity is (1 : 0).
struct ProjectivePoint {
  Complex x0{0.0};
  Complex x1{1.0};

  static ProjectivePoint finite(Complex z) { return {z, 1.0}; }
  static ProjectivePoint infinity() { return {1.0, 0.0}; }

  bool is_infinity() const { return x1 == Complex(0.0) && x0 != Complex(0.0); }
  /// Representative scaled to unit l2 norm. Throws DomainError for (0 : 0).
  ProjectivePoint normalized() const;
  /// x0 / x1; infinite components for the point at infinity.
  Complex affine() const;
};

/// delta(x, y) = |x0 y1 - y0 x1| / (||x|| ||y||), the projective metric with
/// the l2 norm; half the chordal distance on the Riemann sphere.
double chordal_distance(const ProjectivePoint& x, const ProjectivePoint& y);

/// -log delta(z, w) for affine points, split as
/// -log|z - w| + (1/2) log(1 + |z|^2) + (1/2) log(1 + |w|^2).
double neg_log_chordal(Complex z, Complex w);

/// (1/2) log(1 + |z|^2) = -log delta(z, infinity), without overflow.
double half_log_one_plus_abs2(Complex z);

}  // namespace arakelov
