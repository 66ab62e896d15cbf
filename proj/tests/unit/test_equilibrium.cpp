#include <doctest.h>

#include <boost/math/quadrature/gauss.hpp>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "arakelov/errors.hpp"
#include "arakelov/equilibrium.hpp"

using namespace arakelov;

namespace {

constexpr double kPi = std::numbers::pi;
const double kLog2 = std::log(2.0);

// Composite 20-point Gauss-Legendre with panel breaks at `cuts`.
template <class F>
double panels(F f, double a, double b, std::vector<double> cuts, int per) {
  using GL = boost::math::quadrature::gauss<double, 20>;
  cuts.insert(cuts.begin(), a);
  cuts.push_back(b);
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double lo = cuts[k], hi = cuts[k + 1];
    if (!(hi > lo)) continue;
    // Geometric grading toward both ends of the piece resolves the log
    // singularity sitting at a cut.
    std::vector<double> grid{0.0};
    for (int j = per; j >= 1; --j) grid.push_back(0.5 * std::pow(0.25, j));
    grid.push_back(0.5);
    for (int j = 1; j <= per; ++j) grid.push_back(1.0 - 0.5 * std::pow(0.25, j));
    grid.push_back(1.0);
    for (std::size_t g = 0; g + 1 < grid.size(); ++g)
      total += GL::integrate(f, lo + (hi - lo) * grid[g], lo + (hi - lo) * grid[g + 1]);
  }
  return total;
}

// Raw double integral of -log delta(x, z) against the sphere measure, in the
// coordinates u = 1/(1+|z|^2) and t = arg z (both uniform).
double sphere_potential_oracle(Complex x) {
  const double ux = 1.0 / (1.0 + std::norm(x));
  const double tx = std::arg(x) < 0 ? std::arg(x) + 2 * kPi : std::arg(x);
  auto inner = [&](double u) {
    const double rho = std::sqrt((1.0 - u) / u);
    auto g = [&](double t) {
      const Complex z = std::polar(rho, t);
      return -std::log(std::abs(x - z)) + 0.5 * std::log1p(std::norm(x)) + 0.5 * std::log1p(rho * rho);
    };
    return panels(g, 0.0, 2 * kPi, {tx}, 14) / (2 * kPi);
  };
  return panels(inner, 0.0, 1.0, {ux}, 14);
}

// Harmonic measure from i: the Poisson kernel of |w| > 1 at w0 = Phi_1(i),
// pulled back through x = r cos(theta), both sides of the cut.
double poisson_oracle(double x, double r) {
  const Complex root = std::sqrt(Complex(-1.0 - r * r, 0.0));
  Complex w0 = (Complex(0, 1) + root) / r;
  if (std::abs(w0) < 1) w0 = (Complex(0, 1) - root) / r;
  const double th = std::acos(x / r);
  auto P = [&](double t) { return (std::norm(w0) - 1) / (2 * kPi * std::norm(std::polar(1.0, t) - w0)); };
  return (P(th) + P(-th)) / (r * std::sin(th));
}

double central_abs_derivative(double x, double r, bool upper) {
  const double h = 1e-5;
  const Complex d = (conformal_boundary_value(x + h, r, upper) - conformal_boundary_value(x - h, r, upper)) / (2 * h);
  return std::abs(d);
}

}  // namespace

TEST_CASE("target sets") {
  CHECK(TargetSet::interval(2).radius() == 2.0);
  CHECK(TargetSet::sphere().name() == "sphere");
  CHECK(TargetSet::real_line().name() == "real-line");
  CHECK(TargetSet::interval(1).name() == "interval");
  CHECK_THROWS_AS(TargetSet::interval(0), DomainError);
  CHECK_THROWS_AS(TargetSet::interval(-1), DomainError);
  CHECK_THROWS_AS(TargetSet::interval(INFINITY), DomainError);
  CHECK(analytic_energy(TargetSet::sphere()) == 0.5);
  CHECK(analytic_energy(TargetSet::real_line()) == doctest::Approx(kLog2));
  CHECK(analytic_energy(TargetSet::interval(2)) == doctest::Approx(0.5 * std::log(5.0)).epsilon(1e-15));
}

TEST_CASE("density examples") {
  CHECK(density(TargetSet::sphere(), 0.0) == doctest::Approx(1 / kPi).epsilon(1e-15));
  CHECK(density(TargetSet::real_line(), 1.0) == doctest::Approx(1 / (2 * kPi)).epsilon(1e-15));
  CHECK(density(TargetSet::interval(2), 0.0) == doctest::Approx(0.3558812717).epsilon(1e-9));
  for (double r : {0.5, 1.0, 2.0, 5.0})
    for (double t : {-0.9, -0.5, 0.0, 0.3, 0.77})
      CHECK(density(TargetSet::interval(r), t * r) == doctest::Approx(poisson_oracle(t * r, r)).epsilon(1e-12));
  CHECK_THROWS_AS(density(TargetSet::interval(2), 2.0), DomainError);
  CHECK_THROWS_AS(density(TargetSet::interval(2), 3.0), DomainError);
  CHECK_THROWS_AS(density(TargetSet::real_line(), Complex(0, 1)), DomainError);
}

TEST_CASE("mass") {
  CHECK(mass(TargetSet::sphere()).value == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(mass(TargetSet::real_line()).value == doctest::Approx(1.0).epsilon(1e-8));
  for (double r : {0.5, 1.0, 2.0, 5.0}) {
    const auto m = mass(TargetSet::interval(r));
    CHECK(std::abs(m.value - 1.0) <= 1e-7);
    CHECK(m.est_error >= 0.0);
  }
}

TEST_CASE("potential examples") {
  CHECK(std::abs(potential(TargetSet::sphere(), ProjectivePoint::infinity()).value - 0.5) <= 1e-6);
  CHECK(std::abs(potential(TargetSet::real_line(), ProjectivePoint::finite(0.0)).value - kLog2) <= 1e-6);
  CHECK(std::abs(potential(TargetSet::interval(2), ProjectivePoint::finite(0.3)).value - 0.5 * std::log(5.0)) <= 1e-4);
}

TEST_CASE("sphere potential against a raw 2D oracle") {
  for (Complex x : {Complex(0.0, 0.0), Complex(0.3, -0.4), Complex(1.0, 0.0), Complex(-2.0, 1.5)}) {
    const double oracle = sphere_potential_oracle(x);
    CHECK(std::abs(oracle - 0.5) <= 1e-6);
    CHECK(std::abs(potential(TargetSet::sphere(), ProjectivePoint::finite(x)).value - oracle) <= 1e-6);
  }
}

TEST_CASE("potential constancy") {
  std::mt19937_64 eng(7);
  std::uniform_real_distribution<double> u(-1, 1);
  std::normal_distribution<double> g;
  auto spread = [](const std::vector<double>& v) {
    return *std::max_element(v.begin(), v.end()) - *std::min_element(v.begin(), v.end());
  };
  std::vector<double> sph, rl;
  for (int k = 0; k < 50; ++k) {
    sph.push_back(potential(TargetSet::sphere(), ProjectivePoint::finite({3 * g(eng), 3 * g(eng)})).value);
    rl.push_back(potential(TargetSet::real_line(), ProjectivePoint::finite(std::tan(1.5 * u(eng)))).value);
  }
  CHECK(spread(sph) <= 1e-4);
  CHECK(std::abs(sph.front() - 0.5) <= 1e-4);
  CHECK(spread(rl) <= 1e-4);
  CHECK(std::abs(rl.front() - kLog2) <= 1e-4);
  for (double r : {0.5, 2.0}) {
    std::vector<double> iv;
    for (int k = 0; k < 50; ++k) iv.push_back(potential(TargetSet::interval(r), ProjectivePoint::finite(0.95 * r * u(eng))).value);
    CHECK(spread(iv) <= 1e-3);
    CHECK(std::abs(iv.front() - analytic_energy(TargetSet::interval(r))) <= 1e-3);
  }
}

TEST_CASE("sphere rotational invariance") {
  for (Complex x : {Complex(0.2, 0.1), Complex(-3.0, 2.0), Complex(0.0, 0.7)}) {
    const double a = potential(TargetSet::sphere(), ProjectivePoint::finite(x)).value;
    const double b = potential(TargetSet::sphere(), ProjectivePoint::finite(1.0 / std::conj(x))).value;
    CHECK(std::abs(a - b) <= 1e-8);
  }
}

TEST_CASE("energies") {
  CHECK(std::abs(energy(TargetSet::sphere()).value - 0.5) <= 1e-6);
  CHECK(std::abs(energy(TargetSet::real_line()).value - kLog2) <= 1e-6);
  CHECK(std::abs(energy(TargetSet::interval(2)).value - 0.5 * std::log(5.0)) <= 1e-5);
  CHECK(std::abs(energy_double_integral(TargetSet::interval(1)).value - std::log(2 * std::sqrt(2.0))) <= 1e-5);
}

TEST_CASE("monotone in r") {
  double prev = INFINITY;
  for (double r : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0}) {
    const double e = energy(TargetSet::interval(r)).value;
    CHECK(e < prev);
    CHECK(e > kLog2);
    prev = e;
  }
}

TEST_CASE("poisson identity") {
  for (double x : {0.0, 0.5, -0.5, 1.0, -1.0, 3.0, -3.0, 10.0, -10.0})
    CHECK(std::abs(poisson_log_integral(x).value - 0.5 * std::log1p(x * x)) <= 1e-6);
}

TEST_CASE("conformal map") {
  CHECK(conformal_map(Complex(0, 1), 2).is_infinity());
  CHECK(conformal_map(Complex(0, 1), 0.5).is_infinity());
  CHECK(std::abs(joukowski_inverse(Complex(0, 1), 2)) == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-14));
  // Phi_1(z) ~ 2z/r at infinity.
  const Complex big(1e6, 3e5);
  CHECK(std::abs(joukowski_inverse(big, 2) / (2.0 * big / 2.0) - 1.0) < 1e-10);
  // Phi_2 sends infinity to conj(w0), so Phi itself stays bounded there.
  const Complex w0(0.0, (std::sqrt(5.0) + 1) / 2);
  CHECK(std::abs(conformal_map(big, 2).affine() - std::conj(w0)) < 1e-5);
  CHECK_THROWS_AS(conformal_map(Complex(0.5, 0), 2), DomainError);
  // Exterior maps outside the unit disk.
  std::mt19937_64 eng(9);
  std::normal_distribution<double> g;
  for (int k = 0; k < 200; ++k) {
    const Complex z{3 * g(eng), 3 * g(eng)};
    CHECK(std::abs(joukowski_inverse(z, 1.5)) > 1.0);
    const auto w = conformal_map(z, 1.5);
    if (!w.is_infinity()) CHECK(std::abs(w.affine()) > 1.0);
  }
  // Boundary values land on the unit circle.
  for (double x : {-1.2, 0.0, 0.9})
    for (bool up : {true, false}) CHECK(std::abs(conformal_boundary_value(x, 1.5, up)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("green function") {
  CHECK(green_interval(Complex(0, 1), 2) == doctest::Approx(0.4812118251).epsilon(1e-10));
  CHECK(green_interval(Complex(0, 1), 1) == doctest::Approx(0.8813735870).epsilon(1e-10));
  CHECK(green_interval(Complex(2.0 + 1e-12, 0), 2) < 1e-5);
  CHECK(green_interval(Complex(5, 0), 2) > green_interval(Complex(3, 0), 2));
  CHECK_THROWS_AS(green_interval(Complex(1.0, 0), 2), DomainError);
}

TEST_CASE("density equals the boundary derivative of the conformal map") {
  for (double r : {0.5, 1.0, 2.0, 5.0}) {
    for (double t : {-0.8, -0.3, 0.0, 0.45, 0.9}) {
      const double x = t * r;
      const double via_map = (central_abs_derivative(x, r, true) + central_abs_derivative(x, r, false)) / (2 * kPi);
      CHECK(std::abs(density(TargetSet::interval(r), x) - via_map) <= 1e-6);
    }
  }
}

TEST_CASE("harmonic measure") {
  CHECK(std::abs(harmonic_measure_interval(2, -2, 2).value - 1.0) <= 1e-7);
  CHECK(std::abs(harmonic_measure_interval(2, -2, 0).value - 0.5) <= 1e-7);
  const double mid = harmonic_measure_interval(2, -1, 1).value;
  CHECK(mid > 0.0);
  CHECK(mid < 1.0);
  QuadratureOptions fine;
  fine.tol = 1e-13;
  CHECK(std::abs(harmonic_measure_interval(2, -1, 1, fine).value - mid) <= 1e-7);
  const double via_cdf = interval_angle_cdf(std::asin(0.5), 2) - interval_angle_cdf(std::asin(-0.5), 2);
  CHECK(std::abs(mid - via_cdf) <= 1e-7);
  CHECK_THROWS_AS(harmonic_measure_interval(2, 1, -1), DomainError);
  CHECK_THROWS_AS(harmonic_measure_interval(2, -3, 1), DomainError);

  for (double q : {0.01, 0.3, 0.5, 0.99})
    CHECK(interval_angle_cdf(interval_angle_quantile(q, 1.5), 1.5) == doctest::Approx(q).epsilon(1e-13));
}

TEST_CASE("balayage") {
  const auto b2 = energy_via_balayage(2);
  CHECK(std::abs(b2.value - 0.5 * std::log(5.0)) <= 1e-5);
  CHECK(std::abs(b2.value - green_interval(Complex(0, 1), 2) - std::log(2 * std::sqrt(5.0) / (1 + std::sqrt(5.0)))) <=
        1e-5);
  CHECK(std::abs(energy_via_balayage(1).value - std::log(2 * std::sqrt(2.0))) <= 1e-5);
  double prev = INFINITY;
  for (double r : {1.0, 4.0, 16.0, 64.0}) {
    const double v = energy_via_balayage(r).value;
    CHECK(v < prev);
    CHECK(v > kLog2);
    prev = v;
  }
}

TEST_CASE("grids") {
  const auto d = density_grid(TargetSet::interval(1), 8);
  CHECK(d.size() == 8);
  for (auto [x, v] : d) {
    CHECK(std::abs(x) < 1.0);
    CHECK(v > 0.0);
  }
  const auto p = potential_grid(TargetSet::real_line(), 5);
  for (auto [x, v] : p) CHECK(std::abs(v - kLog2) <= 1e-6);
}
