#include "arakelov/fekete.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <random>

#include "arakelov/errors.hpp"

namespace arakelov {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kArmijo = 1e-4;
// Accepted steps without a strict decrease before giving up.
constexpr int kFlatSteps = 100;

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

int point_count(const TargetSet& set, std::span<const double> params) {
  const int per = params_per_point(set);
  if (params.size() % per != 0) throw DomainError("parameter vector length does not match the target set");
  const int n = static_cast<int>(params.size()) / per;
  if (n < 2) throw DomainError("a configuration needs at least 2 points");
  return n;
}

double raw_pair_sum(const TargetSet& set, std::span<const double> params, std::span<double> grad, Exec exec) {
  switch (set.kind()) {
    case TargetSet::Kind::RealLine: return kernels::circle_pair_sum(params, grad, exec);
    case TargetSet::Kind::Sphere: return kernels::sphere_pair_sum(params, grad, exec);
    case TargetSet::Kind::Interval: return kernels::interval_pair_sum(params, set.radius(), grad, exec);
  }
  return 0.0;
}

double objective(const TargetSet& set, std::span<const double> params, std::span<double> grad, Exec exec) {
  const int n = point_count(set, params);
  const double scale = 1.0 / (static_cast<double>(n) * (n - 1));
  const double e = raw_pair_sum(set, params, grad, exec) * scale;
  for (double& g : grad) g *= scale;
  return e;
}

void canonicalize(const TargetSet& set, std::vector<double>& params) {
  switch (set.kind()) {
    case TargetSet::Kind::RealLine:
      for (double& t : params) t -= kPi * std::floor((t + 0.5 * kPi) / kPi);
      break;
    case TargetSet::Kind::Interval:
      for (double& t : params) t = std::asin(std::sin(t));
      break;
    case TargetSet::Kind::Sphere:
      for (std::size_t i = 0; i + 1 < params.size(); i += 2) {
        const double sp = std::sin(params[i]);
        const double x = sp * std::cos(params[i + 1]), y = sp * std::sin(params[i + 1]), z = std::cos(params[i]);
        params[i] = std::atan2(std::hypot(x, y), z);
        double az = std::atan2(y, x);
        if (az < 0.0) az += 2.0 * kPi;
        params[i + 1] = az;
      }
      break;
  }
}

// 53 random bits to a double in (0, 1).
double unit_open(std::mt19937_64& eng) { return (static_cast<double>(eng() >> 11) + 0.5) * 0x1.0p-53; }

}  // namespace

std::string status_name(DescentStatus s) {
  switch (s) {
    case DescentStatus::Converged: return "converged";
    case DescentStatus::Stalled: return "stalled";
    case DescentStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "";
}

int PointConfiguration::n() const { return static_cast<int>(params.size()) / params_per_point(set); }

int params_per_point(const TargetSet& set) { return set.kind() == TargetSet::Kind::Sphere ? 2 : 1; }

double discrete_energy(const TargetSet& set, std::span<const double> params, Exec exec) {
  const double e = objective(set, params, {}, exec);
  if (!std::isfinite(e)) throw DomainError("coincident points have infinite energy");
  return e;
}

double discrete_energy(const PointConfiguration& config) { return discrete_energy(config.set, config.params); }

double discrete_energy_gradient(const TargetSet& set, std::span<const double> params, std::span<double> grad,
                                Exec exec) {
  if (grad.size() != params.size()) throw DomainError("gradient buffer has the wrong length");
  const double e = objective(set, params, grad, exec);
  if (!std::isfinite(e)) throw DomainError("coincident points have infinite energy");
  return e;
}

std::vector<ProjectivePoint> configuration_points(const TargetSet& set, std::span<const double> params) {
  const int n = point_count(set, params);
  std::vector<ProjectivePoint> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    switch (set.kind()) {
      case TargetSet::Kind::RealLine: out.push_back({std::sin(params[i]), std::cos(params[i])}); break;
      case TargetSet::Kind::Interval: out.push_back({set.radius() * std::sin(params[i]), 1.0}); break;
      case TargetSet::Kind::Sphere: {
        // Stereographic from the north pole: z = tan(polar/2) e^{i azimuth}.
        const double polar = params[2 * i], az = params[2 * i + 1];
        out.push_back({std::sin(0.5 * polar) * std::polar(1.0, az), Complex(std::cos(0.5 * polar))});
        break;
      }
    }
  }
  return out;
}

double equally_spaced_energy(int n) {
  if (n < 2) throw DomainError("equally_spaced_energy needs N >= 2");
  return std::log(2.0) - std::log(static_cast<double>(n)) / (n - 1);
}

std::vector<double> equally_spaced_angles(int n) {
  if (n < 2) throw DomainError("equally_spaced_angles needs N >= 2");
  std::vector<double> t(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) t[k] = -0.5 * kPi + kPi * k / n;
  return t;
}

std::vector<double> equilibrium_sample(const TargetSet& set, int n, std::uint64_t seed, std::uint64_t stream) {
  if (n < 2) throw DomainError("a configuration needs at least 2 points");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32), 0x6665u};
  std::mt19937_64 eng(seq);
  std::vector<double> out;
  for (int i = 0; i < n; ++i) {
    const double u = unit_open(eng);
    switch (set.kind()) {
      case TargetSet::Kind::RealLine: out.push_back(-0.5 * kPi + kPi * u); break;
      case TargetSet::Kind::Interval: out.push_back(interval_angle_quantile(u, set.radius())); break;
      case TargetSet::Kind::Sphere:
        out.push_back(std::acos(2.0 * u - 1.0));
        out.push_back(2.0 * kPi * unit_open(eng));
        break;
    }
  }
  return out;
}

PointConfiguration descend(const TargetSet& set, std::vector<double> x, const DescentOptions& opt,
                           const std::function<void(double)>& trace) {
  if (opt.budget < 1) throw DomainError("budget must be at least 1");
  const std::size_t m = x.size();
  std::vector<double> g(m), trial(m), trial_g(m), prev_x(m), prev_g(m);
  double e = discrete_energy_gradient(set, x, g, opt.exec);

  PointConfiguration out;
  out.set = set;
  out.status = DescentStatus::BudgetExhausted;
  double alpha = 1.0 / std::max(1.0, std::sqrt(dot(g, g)));
  long it = 0;
  int flat = 0;
  for (; it < opt.budget; ++it) {
    const double g2 = dot(g, g);
    if (std::sqrt(g2) <= opt.gtol) {
      out.status = DescentStatus::Converged;
      break;
    }
    if (it > 0) {
      double ss = 0.0, sy = 0.0;
      for (std::size_t k = 0; k < m; ++k) {
        const double s = x[k] - prev_x[k], y = g[k] - prev_g[k];
        ss += s * s;
        sy += s * y;
      }
      alpha = sy > 0.0 ? ss / sy : 2.0 * alpha;
    }
    alpha = std::clamp(alpha, 1e-12, 1e3);

    bool accepted = false;
    double trial_e = e;
    for (int ls = 0; ls < 60; ++ls) {
      for (std::size_t k = 0; k < m; ++k) trial[k] = x[k] - alpha * g[k];
      trial_e = objective(set, trial, trial_g, opt.exec);
      if (!std::isfinite(trial_e) || trial_e > e) {
        alpha *= 0.5;
        continue;
      }
      // Near the minimum the Armijo decrease drops below the resolution of
      // e; a step that keeps e and shrinks the gradient is then accepted.
      if (trial_e <= e - kArmijo * alpha * g2 || dot(trial_g, trial_g) < g2) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) {
      out.status = DescentStatus::Stalled;
      break;
    }
    flat = trial_e < e ? 0 : flat + 1;
    prev_x.swap(x);
    prev_g.swap(g);
    x.swap(trial);
    g.swap(trial_g);
    e = trial_e;
    if (flat >= kFlatSteps) {
      ++it;
      out.status = DescentStatus::Stalled;
      if (trace) trace(e);
      break;
    }
    if (trace) trace(e);
  }
  canonicalize(set, x);
  out.params = std::move(x);
  out.energy = e;
  out.iterations = it;
  out.gradient_norm = std::sqrt(dot(g, g));
  return out;
}

PointConfiguration minimize(const TargetSet& set, int n, std::uint64_t seed, const DescentOptions& opt) {
  if (n < 2) throw DomainError("minimize needs N >= 2");
  if (opt.restarts < 1) throw DomainError("restarts must be at least 1");
  const int runs = opt.restarts;
  std::vector<PointConfiguration> results(static_cast<std::size_t>(runs));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(runs));
  DescentOptions inner = opt;
  inner.exec = Exec::Serial;

  auto run = [&](int k) {
    try {
      results[k] = descend(set, equilibrium_sample(set, n, seed, static_cast<std::uint64_t>(k)), inner);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  };
  if (opt.exec == Exec::Serial) {
    for (int k = 0; k < runs; ++k) run(k);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (int k = 0; k < runs; ++k) run(k);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  int best = 0;
  for (int k = 1; k < runs; ++k)
    if (results[k].energy < results[best].energy) best = k;
  return results[best];
}

std::vector<ConvergenceRow> convergence_table(const TargetSet& set, std::span<const int> ns, std::uint64_t seed,
                                              const DescentOptions& opt) {
  std::vector<ConvergenceRow> rows;
  int last = 1;
  for (int n : ns) {
    if (n <= last) throw DomainError("Ns must be strictly increasing and at least 2");
    last = n;
    const PointConfiguration c = minimize(set, n, seed, opt);
    const double limit = analytic_energy(set);
    rows.push_back({n, c.energy, limit, limit - c.energy, c.status});
  }
  return rows;
}

}  // namespace arakelov
