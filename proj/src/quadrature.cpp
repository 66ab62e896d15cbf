#include "arakelov/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "arakelov/errors.hpp"

namespace arakelov {

namespace {

constexpr double kTMax = 4.0;
constexpr int kMinLevel = 3;

bool agrees(double now, double before, double tol) {
  return std::abs(now - before) <= tol * std::max(1.0, std::abs(now));
}

void check_interval(double a, double b, const char* who) {
  if (!(std::isfinite(a) && std::isfinite(b) && a < b))
    throw DomainError(std::string(who) + ": need finite a < b");
}

double guarded(const Integrand& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) throw NumericError("quadrature: integrand not finite at " + message_number(x));
  return y;
}

}  // namespace

QuadratureResult operator+(const QuadratureResult& x, const QuadratureResult& y) {
  return {x.value + y.value, x.est_error + y.est_error, x.evaluations + y.evaluations};
}

QuadratureResult tanh_sinh(const Integrand& f, double a, double b, const QuadratureOptions& opt) {
  check_interval(a, b, "tanh_sinh");
  const double half = 0.5 * (b - a);
  const double mid = a + half;
  const double pi2 = 0.5 * std::numbers::pi;

  std::vector<double> nodes, weights;
  auto add_node = [&](double t) {
    const double u = pi2 * std::sinh(t);
    const double cu = std::cosh(u);
    const double w = half * pi2 * std::cosh(t) / (cu * cu);
    const double offset = half * 2.0 / (1.0 + std::exp(2.0 * std::abs(u)));
    const double x = t == 0.0 ? mid : (t > 0.0 ? b - offset : a + offset);
    if (x <= a || x >= b || w == 0.0) return;
    nodes.push_back(x);
    weights.push_back(w);
  };

  auto g = [&](double x) { return guarded(f, x); };
  double sum = 0.0, prev = 0.0, h = 1.0;
  long evals = 0;
  for (int level = 0; level <= opt.max_level; ++level) {
    nodes.clear();
    weights.clear();
    if (level == 0) {
      for (int j = -static_cast<int>(kTMax); j <= static_cast<int>(kTMax); ++j) add_node(j);
    } else {
      h *= 0.5;
      for (double t = -kTMax + h; t < kTMax; t += 2.0 * h) add_node(t);
    }
    sum += kernels::weighted_sum(g, nodes, weights, opt.exec);
    evals += static_cast<long>(nodes.size());
    const double value = h * sum;
    if (level >= kMinLevel && agrees(value, prev, opt.tol)) return {value, std::abs(value - prev), evals};
    prev = value;
  }
  throw NumericError("tanh_sinh: no convergence on [" + message_number(a) + ", " + message_number(b) + "]");
}

QuadratureResult gauss_legendre(const Integrand& f, double a, double b, const QuadratureOptions& opt) {
  check_interval(a, b, "gauss_legendre");
  using Rule = boost::math::quadrature::gauss<double, 20>;
  const auto& abscissa = Rule::abscissa();
  const auto& weight = Rule::weights();

  auto g = [&](double x) { return guarded(f, x); };
  std::vector<double> nodes, weights;
  double prev = 0.0;
  long evals = 0;
  for (int level = 0; level <= opt.max_level; ++level) {
    const long panels = 1L << level;
    const double width = (b - a) / static_cast<double>(panels);
    nodes.clear();
    weights.clear();
    for (long k = 0; k < panels; ++k) {
      const double c = a + (static_cast<double>(k) + 0.5) * width;
      for (std::size_t i = 0; i < abscissa.size(); ++i) {
        const double dx = 0.5 * width * abscissa[i];
        const double w = 0.5 * width * weight[i];
        if (abscissa[i] == 0.0) {
          nodes.push_back(c);
          weights.push_back(w);
          continue;
        }
        nodes.push_back(c - dx);
        weights.push_back(w);
        nodes.push_back(c + dx);
        weights.push_back(w);
      }
    }
    const double value = kernels::weighted_sum(g, nodes, weights, opt.exec);
    evals += static_cast<long>(nodes.size());
    if (level >= 1 && agrees(value, prev, opt.tol)) return {value, std::abs(value - prev), evals};
    prev = value;
  }
  throw NumericError("gauss_legendre: no convergence on [" + message_number(a) + ", " + message_number(b) + "]");
}

}  // namespace arakelov
