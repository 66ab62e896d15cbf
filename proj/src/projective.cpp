#include "arakelov/projective.hpp"

#include <cmath>
#include <limits>

#include "arakelov/errors.hpp"

namespace arakelov {

namespace {

double norm2(const ProjectivePoint& p) { return std::hypot(std::abs(p.x0), std::abs(p.x1)); }

}  // namespace

ProjectivePoint ProjectivePoint::normalized() const {
  const double n = norm2(*this);
  if (n == 0.0) throw DomainError("(0 : 0) is not a projective point");
  return {x0 / n, x1 / n};
}

Complex ProjectivePoint::affine() const {
  if (x1 == Complex(0.0)) {
    const double inf = std::numeric_limits<double>::infinity();
    return {inf, inf};
  }
  return x0 / x1;
}

double chordal_distance(const ProjectivePoint& x, const ProjectivePoint& y) {
  const ProjectivePoint a = x.normalized();
  const ProjectivePoint b = y.normalized();
  const double d = std::abs(a.x0 * b.x1 - b.x0 * a.x1);
  return d > 1.0 ? 1.0 : d;
}

double half_log_one_plus_abs2(Complex z) { return std::log(std::hypot(1.0, std::abs(z))); }

double neg_log_chordal(Complex z, Complex w) {
  return -std::log(std::abs(z - w)) + half_log_one_plus_abs2(z) + half_log_one_plus_abs2(w);
}

}  // namespace arakelov
