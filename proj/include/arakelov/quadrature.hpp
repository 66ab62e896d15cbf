#pragma once

// Self-validating quadrature. Each rule refines by levels until two
// successive levels agree; est_error is that last disagreement.

#include <functional>

#include "arakelov/kernels.hpp"

namespace arakelov {

struct QuadratureResult {
  double value = 0.0;
  double est_error = 0.0;
  long evaluations = 0;
};

struct QuadratureOptions {
  double tol = 1e-11;  // relative to max(1, |value|)
  int max_level = 10;
  Exec exec = Exec::Parallel;
};

using Integrand = std::function<double(double)>;

/// Double-exponential rule on (a, b). Tolerates integrable endpoint
/// singularities; nodes never touch the endpoints.
QuadratureResult tanh_sinh(const Integrand& f, double a, double b, const QuadratureOptions& opt = {});

/// 20-point Gauss-Legendre on 2^k equal panels, k = 0, 1, ...
QuadratureResult gauss_legendre(const Integrand& f, double a, double b, const QuadratureOptions& opt = {});

/// Sum of results over adjacent pieces.
QuadratureResult operator+(const QuadratureResult& x, const QuadratureResult& y);

}  // namespace arakelov
