#include "arakelov/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "arakelov/errors.hpp"

namespace arakelov {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

double interval_s(double r) { return std::sqrt(r * r + 1.0) + 1.0; }

bool on_real_axis(Complex z) { return z.imag() == 0.0; }

QuadratureOptions serial(QuadratureOptions opt) {
  opt.exec = Exec::Serial;
  return opt;
}

// Sphere, via Jensen's formula in the angular variable. With |x0|^2 + |x1|^2
// = 1 the integrand in u is -log|x1| - log1p(-u)/2 below u* = |x1|^2 and
// -log|x0| - log(u)/2 above it.
QuadratureResult sphere_potential(const ProjectivePoint& p, const QuadratureOptions& opt) {
  const double a = std::abs(p.x0), b = std::abs(p.x1);
  const double split = b * b;
  QuadratureResult out;
  if (split > 0.0) {
    const double lb = std::log(b);
    out = out + tanh_sinh([lb](double u) { return -lb - 0.5 * std::log1p(-u); }, 0.0, std::min(split, 1.0), opt);
  }
  if (split < 1.0 && a > 0.0) {
    const double la = std::log(a);
    out = out + tanh_sinh([la](double u) { return -la - 0.5 * std::log(u); }, split, 1.0, opt);
  }
  return out;
}

// RealLine: y = (sin t : cos t) with t uniform; the integrand
// -log|x0 cos t - x1 sin t| / pi is written around its minimizer tm so the
// singularity sits at the endpoints tau = 0 and tau = pi.
QuadratureResult real_line_potential(const ProjectivePoint& p, const QuadratureOptions& opt) {
  const Complex x0 = p.x0, x1 = p.x1;
  const double c = (x0 * std::conj(x1)).real();
  const double tm = 0.5 * std::atan2(-2.0 * c, std::norm(x0) - std::norm(x1)) + kHalfPi;
  const Complex f0 = x0 * std::cos(tm) - x1 * std::sin(tm);
  const Complex g0 = x0 * std::sin(tm) + x1 * std::cos(tm);
  auto integrand = [f0, g0](double tau) { return -std::log(std::abs(f0 * std::cos(tau) - g0 * std::sin(tau))) / kPi; };
  return tanh_sinh(integrand, 0.0, kPi, opt);
}

// Interval: y = r sin phi. For x = (v : 1) the kernel is
// -log|v - y| + log||x|| + log(1+y^2)/2; the first term is split at
// phi* = asin(Re v / r) and expanded there to avoid cancellation.
QuadratureResult interval_potential(const ProjectivePoint& p, double r, const QuadratureOptions& opt) {
  const auto lift = [r](double phi) {
    const double y = r * std::sin(phi);
    return 0.5 * std::log1p(y * y);
  };
  if (p.x1 == Complex(0.0)) {
    return gauss_legendre([&](double phi) { return lift(phi) * interval_angle_weight(phi, r); }, -kHalfPi, kHalfPi, opt);
  }
  const Complex v = p.x0 / p.x1;
  const double log_norm = -std::log(std::abs(p.x1));
  const double star = std::asin(std::clamp(v.real() / r, -1.0, 1.0));
  const Complex rest = v - r * std::sin(star);

  // v - r sin(phi) = rest + 2 r cos((phi + phi*)/2) sin((phi* - phi)/2)
  auto kernel = [=](double phi, double tau_signed) {
    const Complex diff = rest + 2.0 * r * std::cos(0.5 * (phi + star)) * std::sin(0.5 * tau_signed);
    return (log_norm - std::log(std::abs(diff)) + lift(phi)) * interval_angle_weight(phi, r);
  };
  QuadratureResult out;
  if (star > -kHalfPi) {
    out = out + tanh_sinh([&](double tau) { return kernel(star - tau, tau); }, 0.0, star + kHalfPi, opt);
  }
  if (star < kHalfPi) {
    out = out + tanh_sinh([&](double tau) { return kernel(star + tau, -tau); }, 0.0, kHalfPi - star, opt);
  }
  return out;
}

Complex mobius_w0(double r) { return {0.0, interval_s(r) / r}; }

ProjectivePoint outer_mobius(Complex w, double r) {
  const Complex w0 = mobius_w0(r);
  return {std::conj(w0) * w - 1.0, w - w0};
}

std::vector<double> grid_points(const TargetSet& set, int n) {
  if (n < 2) throw DomainError("grid needs at least 2 points");
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    if (set.kind() == TargetSet::Kind::Interval) {
      xs[k] = set.radius() * (-1.0 + 2.0 * (k + 0.5) / n);
    } else {
      xs[k] = -5.0 + 10.0 * k / (n - 1);
    }
  }
  return xs;
}

}  // namespace

TargetSet TargetSet::interval(double r) {
  if (!(std::isfinite(r) && r > 0.0)) throw DomainError("interval radius must be positive and finite");
  return TargetSet(Kind::Interval, r);
}

std::string TargetSet::name() const {
  switch (kind_) {
    case Kind::Sphere: return "sphere";
    case Kind::RealLine: return "real-line";
    case Kind::Interval: return "interval";
  }
  return "";
}

double analytic_energy(const TargetSet& set) {
  switch (set.kind()) {
    case TargetSet::Kind::Sphere: return 0.5;
    case TargetSet::Kind::RealLine: return std::log(2.0);
    case TargetSet::Kind::Interval: {
      const double r = set.radius();
      return std::log(2.0) + 0.5 * std::log1p(1.0 / (r * r));
    }
  }
  return 0.0;
}

double density(const TargetSet& set, Complex x) {
  if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) throw DomainError("density: point at infinity");
  switch (set.kind()) {
    case TargetSet::Kind::Sphere: {
      const double q = 1.0 + std::norm(x);
      return 1.0 / (kPi * q * q);
    }
    case TargetSet::Kind::RealLine:
      if (!on_real_axis(x)) throw DomainError("density: real-line measure lives on R");
      return 1.0 / (kPi * (1.0 + x.real() * x.real()));
    case TargetSet::Kind::Interval: {
      const double r = set.radius(), t = x.real();
      if (!on_real_axis(x) || !(std::abs(t) < r)) throw DomainError("density: point outside the open interval");
      const double s = interval_s(r);
      const double root = std::sqrt((r - t) * (r + t));
      const double lo = s - root, hi = s + root;
      return s / (kPi * root) * (1.0 / (t * t + lo * lo) + 1.0 / (t * t + hi * hi));
    }
  }
  return 0.0;
}

double interval_angle_weight(double phi, double r) {
  const double s = interval_s(r);
  const double x = r * std::sin(phi), c = r * std::cos(phi);
  const double lo = s - c, hi = s + c;
  return s / kPi * (1.0 / (x * x + lo * lo) + 1.0 / (x * x + hi * hi));
}

double interval_angle_cdf(double phi, double r) {
  if (phi <= -kHalfPi) return 0.0;
  if (phi >= kHalfPi) return 1.0;
  const double s = interval_s(r);
  const double k = (s + r) / (s - r);
  const double t = std::tan(0.5 * phi);
  return 0.5 + (std::atan(k * t) + std::atan(t / k)) / kPi;
}

double interval_angle_quantile(double q, double r) {
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("quantile level must lie in [0, 1]");
  double lo = -kHalfPi, hi = kHalfPi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (interval_angle_cdf(mid, r) < q) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

QuadratureResult mass(const TargetSet& set, const QuadratureOptions& opt) {
  switch (set.kind()) {
    case TargetSet::Kind::Sphere:
      return gauss_legendre(
          [&](double beta) {
            const double rho = std::tan(beta), sec2 = 1.0 + rho * rho;
            return 2.0 * kPi * rho * density(set, rho) * sec2;
          },
          0.0, kHalfPi, opt);
    case TargetSet::Kind::RealLine:
      return gauss_legendre(
          [&](double t) {
            const double x = std::tan(t);
            return density(set, x) * (1.0 + x * x);
          },
          -kHalfPi, kHalfPi, opt);
    case TargetSet::Kind::Interval: {
      const double r = set.radius();
      return gauss_legendre([&](double phi) { return density(set, r * std::sin(phi)) * r * std::cos(phi); }, -kHalfPi,
                            kHalfPi, opt);
    }
  }
  return {};
}

QuadratureResult potential(const TargetSet& set, const ProjectivePoint& x, const QuadratureOptions& opt) {
  const ProjectivePoint p = x.normalized();
  switch (set.kind()) {
    case TargetSet::Kind::Sphere: return sphere_potential(p, opt);
    case TargetSet::Kind::RealLine: return real_line_potential(p, opt);
    case TargetSet::Kind::Interval: return interval_potential(p, set.radius(), opt);
  }
  return {};
}

QuadratureResult energy_double_integral(const TargetSet& set, const QuadratureOptions& opt) {
  const QuadratureOptions inner = serial(opt);
  long inner_evals = 0;
  auto track = [&](const QuadratureResult& q) {
#pragma omp atomic
    inner_evals += q.evaluations;
    return q.value;
  };
  QuadratureResult out;
  switch (set.kind()) {
    case TargetSet::Kind::Sphere:
      out = gauss_legendre(
          [&](double u) { return track(potential(set, {std::sqrt(1.0 - u), std::sqrt(u)}, inner)); }, 0.0, 1.0, opt);
      break;
    case TargetSet::Kind::RealLine:
      out = gauss_legendre(
          [&](double t) { return track(potential(set, {std::sin(t), std::cos(t)}, inner)) / kPi; }, -kHalfPi,
          kHalfPi, opt);
      break;
    case TargetSet::Kind::Interval: {
      const double r = set.radius();
      out = gauss_legendre(
          [&](double phi) {
            return track(potential(set, {r * std::sin(phi), 1.0}, inner)) * interval_angle_weight(phi, r);
          },
          -kHalfPi, kHalfPi, opt);
      break;
    }
  }
  out.evaluations += inner_evals;
  return out;
}

QuadratureResult energy(const TargetSet& set, const QuadratureOptions& opt, double crosscheck_tol) {
  const ProjectivePoint reference =
      set.kind() == TargetSet::Kind::Interval ? ProjectivePoint{0.0, 1.0} : ProjectivePoint::infinity();
  const QuadratureResult shortcut = potential(set, reference, opt);
  const QuadratureResult full = energy_double_integral(set, opt);
  const double gap = std::abs(shortcut.value - full.value);
  if (gap > crosscheck_tol) {
    throw NumericError("energy: single and double integral disagree by " + message_number(gap));
  }
  return {shortcut.value, std::max(shortcut.est_error, gap), shortcut.evaluations + full.evaluations};
}

Complex joukowski_inverse(Complex z, double r) {
  if (!(r > 0.0)) throw DomainError("interval radius must be positive");
  if (on_real_axis(z) && std::abs(z.real()) <= r) throw DomainError("point lies on the cut [-r, r]");
  const Complex q = std::sqrt(z - r) * std::sqrt(z + r);
  const Complex plus = (z + q) / r, minus = (z - q) / r;
  return std::abs(plus) >= std::abs(minus) ? plus : minus;
}

ProjectivePoint conformal_map(Complex z, double r) {
  if (z == Complex(0.0, 1.0)) {
    if (!(r > 0.0)) throw DomainError("interval radius must be positive");
    return ProjectivePoint::infinity();
  }
  return outer_mobius(joukowski_inverse(z, r), r);
}

Complex conformal_boundary_value(double x, double r, bool upper) {
  if (!(r > 0.0) || !(std::abs(x) < r)) throw DomainError("boundary value needs |x| < r");
  const double h = std::sqrt((r - x) * (r + x));
  const Complex w = Complex(x, upper ? h : -h) / r;
  return outer_mobius(w, r).affine();
}

double green_interval(Complex z, double r) { return std::log(std::abs(joukowski_inverse(z, r))); }

QuadratureResult harmonic_measure_interval(double r, double a, double b, const QuadratureOptions& opt) {
  if (!(r > 0.0)) throw DomainError("interval radius must be positive");
  if (!(-r <= a && a < b && b <= r)) throw DomainError("harmonic measure needs -r <= a < b <= r");
  const double lo = std::asin(std::clamp(a / r, -1.0, 1.0));
  const double hi = std::asin(std::clamp(b / r, -1.0, 1.0));
  return gauss_legendre([r](double phi) { return interval_angle_weight(phi, r); }, lo, hi, opt);
}

QuadratureResult energy_via_balayage(double r, const QuadratureOptions& opt) {
  if (!(std::isfinite(r) && r > 0.0)) throw DomainError("interval radius must be positive and finite");
  const double g = green_interval(Complex(0.0, 1.0), r);
  QuadratureResult lift = gauss_legendre(
      [r](double phi) {
        const double y = r * std::sin(phi);
        return 0.5 * std::log1p(y * y) * interval_angle_weight(phi, r);
      },
      -kHalfPi, kHalfPi, opt);
  lift.value += g;
  return lift;
}

QuadratureResult poisson_log_integral(double x, const QuadratureOptions& opt) {
  // t = tan(theta); log|x - t| = log|sin(theta0 - theta)| - log cos(theta0) - log cos(theta).
  const double t0 = std::atan(x);
  const double c0 = std::log(std::cos(t0));
  auto piece = [&](double theta, double gap) {
    return (std::log(std::abs(std::sin(gap))) - c0 - std::log(std::cos(theta))) / kPi;
  };
  QuadratureResult left = tanh_sinh([&](double tau) { return piece(t0 - tau, tau); }, 0.0, t0 + kHalfPi, opt);
  QuadratureResult right = tanh_sinh([&](double tau) { return piece(t0 + tau, tau); }, 0.0, kHalfPi - t0, opt);
  return left + right;
}

std::vector<std::pair<double, double>> density_grid(const TargetSet& set, int n) {
  std::vector<std::pair<double, double>> out;
  for (double x : grid_points(set, n)) out.emplace_back(x, density(set, x));
  return out;
}

std::vector<std::pair<double, double>> potential_grid(const TargetSet& set, int n, const QuadratureOptions& opt) {
  std::vector<std::pair<double, double>> out;
  for (double x : grid_points(set, n)) out.emplace_back(x, potential(set, {x, 1.0}, opt).value);
  return out;
}

}  // namespace arakelov
