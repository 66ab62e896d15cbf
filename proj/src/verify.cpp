#include "arakelov/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include "arakelov/bounds.hpp"
#include "arakelov/corpus.hpp"
#include "arakelov/cyclotomic.hpp"
#include "arakelov/equilibrium.hpp"
#include "arakelov/errors.hpp"
#include "arakelov/fekete.hpp"
#include "arakelov/heights.hpp"
#include "arakelov/number_theory.hpp"

namespace arakelov {

namespace {

constexpr double kLn2 = std::numbers::ln2;

std::string fmt(const char* spec, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

using Check = std::function<bool(std::string&)>;

void run(std::vector<CheckResult>& out, const std::string& suite, const std::string& name, const Check& check) {
  CheckResult r{suite, name, false, ""};
  try {
    r.passed = check(r.detail);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("error: ") + e.what();
  }
  out.push_back(std::move(r));
}

void heights_suite(std::vector<CheckResult>& out, std::uint64_t seed) {
  const std::string s = "heights";
  const double half_log2 = 0.5 * kLn2;

  run(out, s, "cyclotomic-equality", [&](std::string& d) {
    double worst = 0.0;
    int count = 0;
    bool flagged = true;
    for (std::int64_t n : orders_with_totient_at_most(20)) {
      const auto f = cyclotomic_polynomial(n);
      const HeightReport r = height_report(AlgebraicPoint(PrimitivePolynomial::from_coefficients(f)));
      worst = std::max(worst, std::abs(r.h_arakelov - half_log2));
      flagged = flagged && r.has_flag("root-of-unity");
      ++count;
    }
    d = std::to_string(count) + " polynomials, max |h - 1/2 log 2| = " + fmt("%.1e", worst);
    return worst <= 1e-9 && flagged;
  });

  const std::vector<PrimitivePolynomial> corpus = random_corpus(2000, seed);
  std::vector<AlgebraicPoint> points(corpus.begin(), corpus.end());
  std::vector<HeightReport> reports;
  try {
    reports = height_reports(points);
  } catch (const std::exception&) {
  }

  run(out, s, "lower-bound-corpus", [&](std::string& d) {
    if (reports.size() != points.size()) throw NumericError("corpus evaluation failed");
    double margin = 1e300;
    int near = 0, near_cyclotomic = 0;
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const double gap = reports[i].h_arakelov - half_log2;
      margin = std::min(margin, gap);
      if (std::abs(gap) <= 1e-6) {
        ++near;
        near_cyclotomic += is_cyclotomic(corpus[i]) ? 1 : 0;
      }
    }
    d = std::to_string(reports.size()) + " points, min h - 1/2 log 2 = " + fmt("%.3e", margin) + ", " +
        std::to_string(near) + " at equality (" + std::to_string(near_cyclotomic) + " cyclotomic)";
    return margin >= -1e-9 && near == near_cyclotomic;
  });

  run(out, s, "decomposition-corpus", [&](std::string& d) {
    if (reports.size() != points.size()) throw NumericError("corpus evaluation failed");
    double worst = 0.0;
    int checked = 0;
    for (const auto& r : reports) {
      if (!r.crosscheck_residual) continue;
      worst = std::max(worst, *r.crosscheck_residual);
      ++checked;
    }
    d = std::to_string(checked) + " points of degree >= 2, max residual = " + fmt("%.1e", worst);
    return worst <= 1e-9;
  });

  run(out, s, "x^2-2", [&](std::string& d) {
    const HeightReport r = height_report(AlgebraicPoint::parse("x^2-2"));
    const double d_inf = r.locals.at(0).value, d_2 = r.locals.at(1).value;
    d = "h_Ar = " + fmt("%.10f", r.h_arakelov) + ", D_inf = " + fmt("%.10f", d_inf) + ", D_2 = " + fmt("%.10f", d_2);
    return std::abs(r.h_arakelov - 0.5 * std::log(3.0)) <= 1e-10 &&
           std::abs(d_inf + std::log(2.0 * std::sqrt(2.0) / 3.0)) <= 1e-10 && d_2 == 1.5 * kLn2 &&
           r.locals.size() == 2;
  });

  run(out, s, "x^2+x+1", [&](std::string& d) {
    const HeightReport r = height_report(AlgebraicPoint::parse("x^2+x+1"));
    d = "h_Ar = " + fmt("%.10f", r.h_arakelov) + ", D_3 = " + fmt("%.10f", r.locals.at(1).value);
    return std::abs(r.h_arakelov - half_log2) <= 1e-10 && r.has_flag("root-of-unity") &&
           r.locals.at(1).place == Place::finite(std::int64_t{3}) &&
           std::abs(r.locals.at(1).value - 0.5 * std::log(3.0)) <= 1e-15;
  });

  run(out, s, "zero-and-infinity", [&](std::string& d) {
    const double h0 = arakelov_height(AlgebraicPoint::zero());
    const double hinf = arakelov_height(AlgebraicPoint::infinity());
    d = "h(0) = " + fmt("%.1f", h0) + ", h(inf) = " + fmt("%.1f", hinf);
    return h0 == 0.0 && hinf == 0.0;
  });
}

void measures_suite(std::vector<CheckResult>& out) {
  const std::string s = "measures";
  auto energy_check = [&](const std::string& name, const TargetSet& set, double tol) {
    run(out, s, name, [&, set, tol](std::string& d) {
      const QuadratureResult q = energy(set);
      const double want = analytic_energy(set);
      d = "I = " + fmt("%.10f", q.value) + ", closed form " + fmt("%.10f", want);
      return std::abs(q.value - want) <= tol;
    });
  };
  energy_check("energy-sphere", TargetSet::sphere(), 1e-6);
  energy_check("energy-real-line", TargetSet::real_line(), 1e-6);
  for (double r : {0.5, 1.0, 2.0, 5.0}) energy_check("energy-interval-" + fmt("%g", r), TargetSet::interval(r), 1e-5);

  run(out, s, "potential-constancy-sphere", [&](std::string& d) {
    double lo = 1e300, hi = -1e300;
    for (int k = 0; k < 20; ++k) {
      const Complex z = std::polar(std::tan(0.075 * (k + 1)), 0.9 * k);
      const double u = potential(TargetSet::sphere(), ProjectivePoint::finite(z)).value;
      lo = std::min(lo, u);
      hi = std::max(hi, u);
    }
    d = "20 points, spread = " + fmt("%.1e", hi - lo);
    return hi - lo <= 1e-4 && std::abs(hi - 0.5) <= 1e-4;
  });

  run(out, s, "poisson-identity", [&](std::string& d) {
    double worst = 0.0;
    for (double x : {0.0, 0.5, -0.5, 1.0, -1.0, 3.0, -3.0, 10.0, -10.0}) {
      worst = std::max(worst, std::abs(poisson_log_integral(x).value - 0.5 * std::log1p(x * x)));
    }
    d = "9 points, max error = " + fmt("%.1e", worst);
    return worst <= 1e-6;
  });

  for (double r : {0.5, 1.0, 2.0, 5.0}) {
    run(out, s, "mass-interval-" + fmt("%g", r), [&, r](std::string& d) {
      const double m = mass(TargetSet::interval(r)).value;
      d = "mass = " + fmt("%.12f", m);
      return std::abs(m - 1.0) <= 1e-7;
    });
    run(out, s, "balayage-interval-" + fmt("%g", r), [&, r](std::string& d) {
      const double v = energy_via_balayage(r).value;
      d = "g(i,inf) + lift = " + fmt("%.10f", v);
      return std::abs(v - analytic_energy(TargetSet::interval(r))) <= 1e-5;
    });
  }
}

void bounds_suite(std::vector<CheckResult>& out) {
  const std::string s = "bounds";
  auto example = [&](const std::string& name, const std::function<BoundResult()>& make, const std::string& want) {
    run(out, s, name, [&, make, want](std::string& d) {
      const std::string got = fmt("%.6f", make().value);
      d = "bound = " + got;
      return got == want;
    });
  };
  example("example-1", [] { return lower_bound(PlaceSet::parse("inf,2")); }, "0.577623");
  example("example-2", [] { return lower_bound_interval(PlaceSet::parse("inf,2"), 2.0); }, "0.633409");
  example("example-3", [] { return lower_bound_interval(PlaceSet::parse("inf"), 2.0); }, "0.402359");

  run(out, s, "chebyshev-integral", [&](std::string& d) {
    const double v = chebyshev_limit_integral().value;
    d = "integral = " + fmt("%.10f", v);
    return std::abs(v - 0.481212) <= 1e-6;
  });

  run(out, s, "single-place-beaters", [&](std::string& d) {
    const auto b = single_place_beaters();
    for (auto p : b) d += (d.empty() ? "" : ",") + std::to_string(p);
    return b == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13};
  });

  run(out, s, "beating-pairs", [&](std::string& d) {
    const PairCensus c = count_beating_pairs();
    d = std::to_string(c.count()) + " pairs, cutoff " + std::to_string(c.cutoff);
    return c.count() == 82;
  });
}

void fekete_suite(std::vector<CheckResult>& out, std::uint64_t seed) {
  const std::string s = "fekete";
  for (int n : {2, 4, 8, 16, 32}) {
    run(out, s, "real-line-" + std::to_string(n), [&, n](std::string& d) {
      const PointConfiguration c = minimize(TargetSet::real_line(), n, seed);
      const double want = equally_spaced_energy(n);
      d = "E = " + fmt("%.10f", c.energy) + ", closed form " + fmt("%.10f", want);
      return std::abs(c.energy - want) <= 1e-6;
    });
  }
  run(out, s, "sphere-32", [&](std::string& d) {
    const double e = minimize(TargetSet::sphere(), 32, seed).energy;
    d = "E = " + fmt("%.10f", e);
    return e >= 0.40 && e <= 0.50;
  });
  run(out, s, "interval-1-32", [&](std::string& d) {
    const TargetSet set = TargetSet::interval(1.0);
    const double e = minimize(set, 32, seed).energy;
    const double limit = analytic_energy(set);
    d = "E = " + fmt("%.10f", e) + ", limit " + fmt("%.10f", limit);
    return e >= limit - 0.15 && e <= limit;
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"heights", "measures", "bounds", "fekete"};
  return names;
}

std::vector<CheckResult> run_verify(std::string_view suite, std::uint64_t seed) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "heights") known = true, heights_suite(out, seed);
  if (all || suite == "measures") known = true, measures_suite(out);
  if (all || suite == "bounds") known = true, bounds_suite(out);
  if (all || suite == "fekete") known = true, fekete_suite(out, seed);
  if (!known) throw DomainError("unknown suite '" + std::string(suite) + "'");
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace arakelov
