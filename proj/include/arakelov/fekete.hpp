#pragma once

// Discrete chordal-log energy of N free points on a target set and its
// minimization. This is a numerical stand-in for the variational problem
// whose infimum is the Robin constant; nothing here is a certified optimum.
//
// Parameters per point:
//   RealLine   t, the point tan t          (one angle)
//   Sphere     (polar, azimuth) on S^2      (two angles, interleaved)
//   Interval   t, the point r sin t        (one angle)

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "arakelov/equilibrium.hpp"
#include "arakelov/kernels.hpp"

namespace arakelov {

enum class DescentStatus { Converged, Stalled, BudgetExhausted };
std::string status_name(DescentStatus s);

struct PointConfiguration {
  TargetSet set = TargetSet::sphere();
  std::vector<double> params;
  double energy = 0.0;
  long iterations = 0;
  DescentStatus status = DescentStatus::BudgetExhausted;
  double gradient_norm = 0.0;

  int n() const;
  bool budget_exhausted() const { return status == DescentStatus::BudgetExhausted; }
};

/// Number of angle parameters per point.
int params_per_point(const TargetSet& set);

/// (1/(N(N-1))) sum over i != j of -log delta. Throws DomainError for N < 2,
/// a malformed parameter vector or coincident points.
double discrete_energy(const TargetSet& set, std::span<const double> params, Exec exec = Exec::Parallel);
double discrete_energy(const PointConfiguration& config);

/// Same energy; `grad` (same length as params) receives its gradient.
double discrete_energy_gradient(const TargetSet& set, std::span<const double> params, std::span<double> grad,
                                Exec exec = Exec::Parallel);

/// Points on P^1(C) as projective pairs.
std::vector<ProjectivePoint> configuration_points(const TargetSet& set, std::span<const double> params);

/// log 2 - log(N)/(N-1): N equally spaced angles on the real line.
double equally_spaced_energy(int n);

/// N equally spaced angles in [-pi/2, pi/2).
std::vector<double> equally_spaced_angles(int n);

/// N points sampled from the equilibrium measure. The stream is a function
/// of (seed, stream) only.
std::vector<double> equilibrium_sample(const TargetSet& set, int n, std::uint64_t seed, std::uint64_t stream);

struct DescentOptions {
  long budget = 20000;  // iterations per restart
  double gtol = 1e-10;  // on the Euclidean gradient norm
  int restarts = 8;
  Exec exec = Exec::Parallel;
};

/// Gradient descent with a Barzilai-Borwein trial step and Armijo
/// backtracking from one start. `trace` receives the energy after every
/// accepted step.
PointConfiguration descend(const TargetSet& set, std::vector<double> start, const DescentOptions& opt = {},
                           const std::function<void(double)>& trace = {});

/// Best of `opt.restarts` descents from equilibrium samples. Ties go to the
/// lowest restart index, so the result does not depend on thread count.
PointConfiguration minimize(const TargetSet& set, int n, std::uint64_t seed, const DescentOptions& opt = {});

struct ConvergenceRow {
  int n = 0;
  double energy = 0.0;
  double limit = 0.0;
  double gap = 0.0;  // limit - energy
  DescentStatus status = DescentStatus::Converged;
};

/// One minimize() per N. Ns must be strictly increasing and >= 2.
std::vector<ConvergenceRow> convergence_table(const TargetSet& set, std::span<const int> ns, std::uint64_t seed,
                                              const DescentOptions& opt = {});

}  // namespace arakelov
