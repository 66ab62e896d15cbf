#pragma once

// Equilibrium measures of the chordal log kernel on the Riemann sphere, the
// real projective line and a real interval [-r, r], with their potentials,
// energies, the exterior conformal map of the interval, its Green function
// and the harmonic measure seen from i.
//
// Parametrizations used throughout:
//   Sphere     z = rho e^{it}, u = 1/(1+rho^2) is uniform on (0, 1)
//   RealLine   y = tan(theta), theta uniform on (-pi/2, pi/2)
//   Interval   y = r sin(phi), phi in (-pi/2, pi/2) with smooth weight w(phi)

#include <string>
#include <utility>
#include <vector>

#include "arakelov/projective.hpp"
#include "arakelov/quadrature.hpp"

namespace arakelov {

class TargetSet {
 public:
  enum class Kind { Sphere, RealLine, Interval };

  static TargetSet sphere() { return TargetSet(Kind::Sphere, 0.0); }
  static TargetSet real_line() { return TargetSet(Kind::RealLine, 0.0); }
  static TargetSet interval(double r);

  Kind kind() const { return kind_; }
  double radius() const { return r_; }
  /// "sphere", "real-line" or "interval".
  std::string name() const;

  friend bool operator==(const TargetSet&, const TargetSet&) = default;

 private:
  TargetSet(Kind k, double r) : kind_(k), r_(r) {}
  Kind kind_;
  double r_;
};

/// Closed-form minimal energy: 1/2, log 2, log(2 sqrt(r^2+1)/r).
double analytic_energy(const TargetSet& set);

/// Sphere: per unit area of C. RealLine and Interval: per unit length.
/// Throws DomainError off the support and at x = +-r.
double density(const TargetSet& set, Complex x);

/// Density of the interval measure in the angle phi, x = r sin phi.
double interval_angle_weight(double phi, double r);

/// mu([-r, r sin phi]) in closed form.
double interval_angle_cdf(double phi, double r);
/// Inverse of interval_angle_cdf, by bisection to full precision.
double interval_angle_quantile(double q, double r);

QuadratureResult mass(const TargetSet& set, const QuadratureOptions& opt = {});

/// U(x) = integral of -log delta(x, y) dmu(y).
QuadratureResult potential(const TargetSet& set, const ProjectivePoint& x, const QuadratureOptions& opt = {});

/// Energy via the potential at one point (constancy of the equilibrium
/// potential), cross-checked against the double integral. Throws
/// NumericError when the two disagree by more than `crosscheck_tol`.
QuadratureResult energy(const TargetSet& set, const QuadratureOptions& opt = {}, double crosscheck_tol = 1e-7);

/// Energy as the integral of U against mu.
QuadratureResult energy_double_integral(const TargetSet& set, const QuadratureOptions& opt = {});

/// Phi_1(z) = (z + sqrt(z^2 - r^2)) / r on the branch with |Phi_1| > 1.
Complex joukowski_inverse(Complex z, double r);

/// Phi = Phi_2 o Phi_1, mapping the complement of [-r, r] onto |t| > 1 with
/// Phi(i) = infinity. Throws DomainError on the cut.
ProjectivePoint conformal_map(Complex z, double r);

/// Limit of Phi at x in (-r, r) from above (upper) or below.
Complex conformal_boundary_value(double x, double r, bool upper);

/// g(z, infinity) = log|Phi_1(z)| for the complement of [-r, r].
double green_interval(Complex z, double r);

/// omega(i, [a, b]) by integrating the density.
QuadratureResult harmonic_measure_interval(double r, double a, double b, const QuadratureOptions& opt = {});

/// g(i, infinity) + (1/2) integral of log(1+x^2) d omega(i, x).
QuadratureResult energy_via_balayage(double r, const QuadratureOptions& opt = {});

/// Right side of 1/2 log(1+x^2) = integral of log|x-t| dt/(pi(1+t^2)).
QuadratureResult poisson_log_integral(double x, const QuadratureOptions& opt = {});

/// (x, value) rows for plotting. Grids stay inside the support.
std::vector<std::pair<double, double>> density_grid(const TargetSet& set, int n);
std::vector<std::pair<double, double>> potential_grid(const TargetSet& set, int n, const QuadratureOptions& opt = {});

}  // namespace arakelov
