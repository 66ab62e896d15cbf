#include "arakelov/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace arakelov {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

namespace kernels {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double checked_neg_log(double distance) { return distance > 0.0 ? -std::log(distance) : kInf; }

double sum_rows(const std::vector<double>& rows) {
  double total = 0.0;
  for (double r : rows) total += r;
  return total;
}

struct SpherePoint {
  double x, y, z;
  double dx_polar, dy_polar, dz_polar;
  double dx_azim, dy_azim;
};

SpherePoint sphere_point(double polar, double azim) {
  const double sp = std::sin(polar), cp = std::cos(polar);
  const double sa = std::sin(azim), ca = std::cos(azim);
  return {sp * ca, sp * sa, cp, cp * ca, cp * sa, -sp, -sp * sa, sp * ca};
}

}  // namespace

double chordal_pair_sum(std::span<const Complex> z, Exec exec) {
  const long n = static_cast<long>(z.size());
  std::vector<double> lift(z.size());
  for (long i = 0; i < n; ++i) lift[i] = half_log_one_plus_abs2(z[i]);

  if (exec == Exec::Serial) {
    double total = 0.0;
    for (long i = 0; i < n; ++i) {
      double row = 0.0;
      for (long j = i + 1; j < n; ++j) row += checked_neg_log(std::abs(z[i] - z[j])) + lift[i] + lift[j];
      total += row;
    }
    return total;
  }
  std::vector<double> rows(z.size(), 0.0);
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) {
    double row = 0.0;
    for (long j = i + 1; j < n; ++j) row += checked_neg_log(std::abs(z[i] - z[j])) + lift[i] + lift[j];
    rows[i] = row;
  }
  return sum_rows(rows);
}

double circle_pair_sum(std::span<const double> t, std::span<double> grad, Exec exec) {
  const long n = static_cast<long>(t.size());
  const bool want_grad = !grad.empty();

  if (exec == Exec::Serial) {
    double total = 0.0;
    for (long i = 0; i < n; ++i) {
      double row = 0.0, g = 0.0;
      for (long j = 0; j < n; ++j) {
        if (j == i) continue;
        const double diff = t[i] - t[j];
        row += checked_neg_log(std::abs(std::sin(diff)));
        g -= 2.0 / std::tan(diff);
      }
      if (want_grad) grad[i] = g;
      total += row;
    }
    return total;
  }
  std::vector<double> rows(t.size(), 0.0);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    double row = 0.0, g = 0.0;
    for (long j = 0; j < n; ++j) {
      if (j == i) continue;
      const double diff = t[i] - t[j];
      row += checked_neg_log(std::abs(std::sin(diff)));
      g -= 2.0 / std::tan(diff);
    }
    if (want_grad) grad[i] = g;
    rows[i] = row;
  }
  return sum_rows(rows);
}

double sphere_pair_sum(std::span<const double> angles, std::span<double> grad, Exec exec) {
  const long n = static_cast<long>(angles.size() / 2);
  const bool want_grad = !grad.empty();
  std::vector<SpherePoint> pts(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) pts[i] = sphere_point(angles[2 * i], angles[2 * i + 1]);
  const double log2 = std::log(2.0);

  auto row_of = [&](long i, double& g_polar, double& g_azim) {
    double row = 0.0, gx = 0.0, gy = 0.0, gz = 0.0;
    for (long j = 0; j < n; ++j) {
      if (j == i) continue;
      const double dx = pts[i].x - pts[j].x, dy = pts[i].y - pts[j].y, dz = pts[i].z - pts[j].z;
      const double d2 = dx * dx + dy * dy + dz * dz;
      row += d2 > 0.0 ? std::max(0.0, log2 - 0.5 * std::log(d2)) : kInf;
      gx -= 2.0 * dx / d2;
      gy -= 2.0 * dy / d2;
      gz -= 2.0 * dz / d2;
    }
    const SpherePoint& p = pts[i];
    g_polar = gx * p.dx_polar + gy * p.dy_polar + gz * p.dz_polar;
    g_azim = gx * p.dx_azim + gy * p.dy_azim;
    return row;
  };

  if (exec == Exec::Serial) {
    double total = 0.0;
    for (long i = 0; i < n; ++i) {
      double gp, ga;
      total += row_of(i, gp, ga);
      if (want_grad) {
        grad[2 * i] = gp;
        grad[2 * i + 1] = ga;
      }
    }
    return total;
  }
  std::vector<double> rows(static_cast<std::size_t>(n), 0.0);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    double gp, ga;
    rows[i] = row_of(i, gp, ga);
    if (want_grad) {
      grad[2 * i] = gp;
      grad[2 * i + 1] = ga;
    }
  }
  return sum_rows(rows);
}

double interval_pair_sum(std::span<const double> t, double r, std::span<double> grad, Exec exec) {
  const long n = static_cast<long>(t.size());
  const bool want_grad = !grad.empty();
  std::vector<double> x(t.size()), lift(t.size()), dlift(t.size()), jac(t.size());
  for (long i = 0; i < n; ++i) {
    x[i] = r * std::sin(t[i]);
    jac[i] = r * std::cos(t[i]);
    lift[i] = 0.5 * std::log1p(x[i] * x[i]);
    dlift[i] = x[i] / (1.0 + x[i] * x[i]);
  }

  auto row_of = [&](long i, double& g) {
    double row = 0.0, gx = 0.0;
    for (long j = 0; j < n; ++j) {
      if (j == i) continue;
      const double diff = x[i] - x[j];
      row += std::max(0.0, checked_neg_log(std::abs(diff)) + lift[i] + lift[j]);
      gx += 2.0 * (dlift[i] - 1.0 / diff);
    }
    g = gx * jac[i];
    return row;
  };

  if (exec == Exec::Serial) {
    double total = 0.0;
    for (long i = 0; i < n; ++i) {
      double g;
      total += row_of(i, g);
      if (want_grad) grad[i] = g;
    }
    return total;
  }
  std::vector<double> rows(t.size(), 0.0);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    double g;
    rows[i] = row_of(i, g);
    if (want_grad) grad[i] = g;
  }
  return sum_rows(rows);
}

}  // namespace kernels

}  // namespace arakelov
