#include "arakelov/heights.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>

#include "arakelov/cyclotomic.hpp"
#include "arakelov/errors.hpp"
#include "arakelov/number_theory.hpp"

namespace arakelov {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double log_positive(double x) { return x > 1.0 ? std::log(x) : 0.0; }

}  // namespace

Place Place::finite(BigInt p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
    throw DomainError("place " + p.get_str() + " is not a prime");
  Place out;
  out.prime_ = std::move(p);
  return out;
}

std::string Place::label() const { return prime_ ? prime_->get_str() : "inf"; }

std::string method_name(EnergyMethod m) {
  return m == EnergyMethod::ExactValuation ? "exact-valuation" : "numeric-roots";
}

bool HeightReport::has_flag(std::string_view flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

double log_abs(const BigInt& n) {
  if (n == 0) throw DomainError("log of zero");
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log(std::abs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

LocalEnergy arch_energy_sum(const CertifiedComplexRoots& roots, Exec exec) {
  const std::size_t d = roots.roots.size();
  if (d < 2) throw DomainError("energy sum needs degree >= 2");
  const double pairs = static_cast<double>(d) * static_cast<double>(d - 1);
  const double sum = kernels::chordal_pair_sum(roots.roots, exec);
  if (!std::isfinite(sum)) throw NumericError("arch_energy_sum: coincident roots");

  double propagated = 0.0, magnitude = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const double ri = roots.radius[i], rj = roots.radius[j];
      const double dist = std::abs(roots.roots[i] - roots.roots[j]);
      const double gap = std::max(dist - ri - rj, dist * 1e-3);
      propagated += (ri + rj) / gap + 0.5 * (ri + rj);
      magnitude += std::abs(std::log(dist)) + half_log_one_plus_abs2(roots.roots[i]) +
                   half_log_one_plus_abs2(roots.roots[j]);
    }
  }
  LocalEnergy out;
  out.place = Place::archimedean();
  out.value = 2.0 * sum / pairs;
  out.method = EnergyMethod::NumericRoots;
  out.error_bound = 2.0 * (propagated + 8.0 * static_cast<double>(d) * kEps * magnitude) / pairs;
  return out;
}

LocalEnergy arch_energy_sum(const PrimitivePolynomial& f, double tol, Exec exec) {
  if (f.degree() < 2) throw DomainError("energy sum needs degree >= 2");
  return arch_energy_sum(complex_roots(f, tol), exec);
}

namespace {

LocalEnergy nonarch_from_valuation(long v, const BigInt& p, int d) {
  LocalEnergy out;
  out.place = Place::finite(p);
  out.value = static_cast<double>(v) * log_abs(p) / (static_cast<double>(d) * (d - 1));
  out.method = EnergyMethod::ExactValuation;
  out.error_bound = 0.0;
  return out;
}

}  // namespace

LocalEnergy nonarch_energy_sum(const PrimitivePolynomial& f, const BigInt& p) {
  if (f.degree() < 2) throw DomainError("energy sum needs degree >= 2");
  Place::finite(p);
  return nonarch_from_valuation(valuation(discriminant(f), p), p, f.degree());
}

LocalEnergy nonarch_energy_sum(const PrimitivePolynomial& f, std::int64_t p) {
  return nonarch_energy_sum(f, BigInt(static_cast<long>(p)));
}

namespace {

HeightEstimate arakelov_from_roots(const PrimitivePolynomial& f, const CertifiedComplexRoots& roots) {
  const double d = f.degree();
  double sum = 0.0, err = 0.0, mag = 0.0;
  for (std::size_t i = 0; i < roots.roots.size(); ++i) {
    const double term = half_log_one_plus_abs2(roots.roots[i]);
    sum += term;
    mag += term;
    err += 0.5 * roots.radius[i];
  }
  const double lead = log_abs(f.leading());
  return {(sum + lead) / d, (err + 4.0 * d * kEps * (mag + lead)) / d};
}

HeightEstimate weil_from_roots(const PrimitivePolynomial& f, const CertifiedComplexRoots& roots) {
  const double d = f.degree();
  double sum = 0.0, err = 0.0;
  for (std::size_t i = 0; i < roots.roots.size(); ++i) {
    sum += log_positive(std::abs(roots.roots[i]));
    err += roots.radius[i] / std::max(1.0 - roots.radius[i], 0.5);
  }
  const double lead = log_abs(f.leading());
  return {(sum + lead) / d, (err + 4.0 * d * kEps * (sum + lead)) / d};
}

}  // namespace

HeightEstimate arakelov_height_estimate(const AlgebraicPoint& point, double tol) {
  if (point.is_infinity() || point.is_zero()) return {0.0, 0.0};
  const auto& f = point.polynomial();
  return arakelov_from_roots(f, complex_roots(f, tol));
}

HeightEstimate weil_height_estimate(const AlgebraicPoint& point, double tol) {
  if (point.is_infinity() || point.is_zero()) return {0.0, 0.0};
  const auto& f = point.polynomial();
  return weil_from_roots(f, complex_roots(f, tol));
}

double arakelov_height(const AlgebraicPoint& point, double tol) { return arakelov_height_estimate(point, tol).value; }

double weil_height(const AlgebraicPoint& point, double tol) { return weil_height_estimate(point, tol).value; }

HeightReport height_report(const AlgebraicPoint& point, double tol, Exec exec) {
  HeightReport report;
  if (point.is_infinity()) {
    report.flags.push_back("infinity-point");
    return report;
  }
  const auto& f = point.polynomial();
  const int d = f.degree();
  report.degree = d;
  if (point.is_zero()) {
    report.flags.push_back("zero-point");
    return report;
  }

  const CertifiedComplexRoots roots = complex_roots(f, tol);
  const HeightEstimate ar = arakelov_from_roots(f, roots);
  const HeightEstimate weil = weil_from_roots(f, roots);
  report.h_arakelov = ar.value;
  report.h_weil = weil.value;
  report.error_bound = ar.error_bound;
  if (is_cyclotomic(f)) report.flags.push_back("root-of-unity");
  if (d < 2) return report;
  report.flags.push_back("irreducibility-unverified");

  report.locals.push_back(arch_energy_sum(roots, exec));
  const BigInt disc = discriminant(f);
  const Factorization fac = factor_integer(disc);
  for (const auto& [p, v] : fac.primes) report.locals.push_back(nonarch_from_valuation(v, p, d));

  double half_sum = 0.0;
  for (const auto& local : report.locals) half_sum += local.value;
  if (!fac.complete()) {
    // Primes of the unsplit part each contribute v_p log p / (d(d-1)); only
    // their total log(cofactor part) is known.
    BigInt part = abs(disc);
    for (const auto& [p, v] : fac.primes) {
      BigInt pv;
      mpz_pow_ui(pv.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(v));
      mpz_divexact(part.get_mpz_t(), part.get_mpz_t(), pv.get_mpz_t());
    }
    half_sum += log_abs(part) / (static_cast<double>(d) * (d - 1));
    report.flags.push_back("unfactored-discriminant-part:" + fac.cofactor.get_str());
  }
  half_sum *= 0.5;
  report.crosscheck_residual = std::abs(report.h_arakelov - half_sum);
  report.crosscheck_bound =
      ar.error_bound + 0.5 * report.locals.front().error_bound + 16.0 * kEps * (1.0 + std::abs(half_sum));
  return report;
}

std::vector<HeightReport> height_reports(std::span<const AlgebraicPoint> points, double tol, Exec exec) {
  const long n = static_cast<long>(points.size());
  std::vector<HeightReport> out(points.size());
  if (exec == Exec::Serial) {
    for (long i = 0; i < n; ++i) out[i] = height_report(points[i], tol, Exec::Serial);
    return out;
  }
  std::vector<std::exception_ptr> errors(points.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = height_report(points[i], tol, Exec::Serial);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace arakelov
