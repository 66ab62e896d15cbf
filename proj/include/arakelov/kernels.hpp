#pragma once

// Data-parallel inner loops. Every kernel has a serial reference and an
// OpenMP version. Both compute one partial per row and add the partials in
// row order, so their results agree bit for bit at any thread count.

#include <exception>
#include <span>
#include <vector>

#include "arakelov/projective.hpp"

namespace arakelov {

enum class Exec { Serial, Parallel };

/// Worker count OpenMP would use for a parallel region (1 without OpenMP).
int max_threads();
void set_threads(int n);

namespace kernels {

/// Sum over i < j of -log delta(z_i, z_j). +inf on coincident points.
double chordal_pair_sum(std::span<const Complex> z, Exec exec);

/// Sum over i != j of -log|sin(t_i - t_j)| (points tan t_i on P^1(R)).
/// When `grad` is non-empty it receives d/dt_i of that sum.
double circle_pair_sum(std::span<const double> t, std::span<double> grad, Exec exec);

/// Points on the unit sphere as interleaved (polar, azimuth) angle pairs.
/// Sum over i != j of -log(|P_i - P_j| / 2), gradient w.r.t. the angles.
double sphere_pair_sum(std::span<const double> angles, std::span<double> grad, Exec exec);

/// Points r sin t_i on [-r, r]. Sum over i != j of -log delta, gradient
/// w.r.t. t_i.
double interval_pair_sum(std::span<const double> t, double r, std::span<double> grad, Exec exec);

/// sum_k w_k f(x_k), partials in node order.
template <class F>
double weighted_sum(F&& f, std::span<const double> nodes, std::span<const double> weights, Exec exec) {
  const long n = static_cast<long>(nodes.size());
  if (exec == Exec::Serial) {
    double total = 0.0;
    for (long k = 0; k < n; ++k) total += weights[k] * f(nodes[k]);
    return total;
  }
  std::vector<double> terms(nodes.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(static)
  for (long k = 0; k < n; ++k) {
    try {
      terms[k] = weights[k] * f(nodes[k]);
    } catch (...) {
#pragma omp critical(weighted_sum_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  double total = 0.0;
  for (double t : terms) total += t;
  return total;
}

}  // namespace kernels

}  // namespace arakelov
