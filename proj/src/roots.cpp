#include "arakelov/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "arakelov/errors.hpp"

namespace arakelov {

namespace {

using ld = long double;
using cld = std::complex<long double>;

constexpr int kSweepBudget = 200;
constexpr ld kUnitRoundoff = 0x1p-64L;

ld to_long_double(const BigInt& a) {
  const double hi = mpz_get_d(a.get_mpz_t());
  BigInt rest = a - BigInt(hi);
  return static_cast<ld>(hi) + static_cast<ld>(mpz_get_d(rest.get_mpz_t()));
}

struct Evaluation {
  cld value;
  cld derivative;
  ld abs_bound;  // sum |a_k| |z|^k
};

Evaluation horner(const std::vector<ld>& a, cld z) {
  const std::size_t d = a.size() - 1;
  cld p = a[d];
  cld dp = 0;
  ld s = std::abs(a[d]);
  const ld az = std::abs(z);
  for (std::size_t k = d; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[k];
    s = s * az + std::abs(a[k]);
  }
  return {p, dp, s};
}

}  // namespace

double CertifiedComplexRoots::max_radius() const {
  return radius.empty() ? 0.0 : *std::max_element(radius.begin(), radius.end());
}

CertifiedComplexRoots complex_roots(const PrimitivePolynomial& f, double tol) {
  if (!(tol > 0)) throw DomainError("complex_roots: tolerance must be positive");
  const int d = f.degree();
  std::vector<ld> a;
  a.reserve(static_cast<std::size_t>(d) + 1);
  for (const auto& c : f.coeffs()) a.push_back(to_long_double(c));

  ld cauchy = 0;
  for (int k = 0; k < d; ++k) cauchy = std::max(cauchy, std::abs(a[k] / a[d]));
  cauchy += 1;

  const ld offset = std::numbers::sqrt2_v<ld> / 2;
  std::vector<cld> z(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k)
    z[k] = std::polar(cauchy, 2 * std::numbers::pi_v<ld> * k / d + offset);

  int sweeps = 0;
  ld prev = std::numeric_limits<ld>::infinity();
  bool converged = false;
  while (sweeps < kSweepBudget && !converged) {
    ++sweeps;
    ld worst = 0;
    for (int i = 0; i < d; ++i) {
      const Evaluation e = horner(a, z[i]);
      if (e.value == cld(0)) continue;
      cld repulsion = 0;
      for (int j = 0; j < d; ++j)
        if (j != i) repulsion += ld(1) / (z[i] - z[j]);
      const cld denom = e.derivative - e.value * repulsion;
      const cld step = denom == cld(0) ? cld(1e-8L * std::max(std::abs(z[i]), ld(1)), 0)
                                       : e.value / denom;
      z[i] -= step;
      worst = std::max(worst, std::abs(step) / std::max(std::abs(z[i]), ld(1e-300)));
    }
    if (worst <= 1e-17L) converged = true;
    else if (worst < 1e-10L && worst >= prev / 2) converged = true;  // rounding floor
    prev = worst;
  }
  if (!converged)
    throw NumericError("complex_roots: no convergence within " + std::to_string(kSweepBudget) +
                       " sweeps (ill-conditioned input)");

  CertifiedComplexRoots out;
  out.sweeps = sweeps;
  out.roots.resize(static_cast<std::size_t>(d));
  out.radius.resize(static_cast<std::size_t>(d));
  const ld gamma = (4 * d + 8) * kUnitRoundoff / (1 - (4 * d + 8) * kUnitRoundoff);
  for (int i = 0; i < d; ++i) {
    const Evaluation e = horner(a, z[i]);
    const ld residual = std::abs(e.value) + gamma * e.abs_bound + e.abs_bound * 0x1p-63L;
    cld denom = a[d];
    for (int j = 0; j < d; ++j)
      if (j != i) denom *= (z[i] - z[j]);
    const ld weierstrass = residual / std::abs(denom);
    ld r = (d == 1 ? 1 : d) * weierstrass * (1 + 1e-10L);
    out.roots[i] = std::complex<double>(static_cast<double>(z[i].real()), static_cast<double>(z[i].imag()));
    r += std::abs(z[i]) * 0x1p-52L + 1e-300L;
    out.radius[i] = static_cast<double>(r);
  }

  for (int i = 0; i < d; ++i) {
    if (!(out.radius[i] <= tol))
      throw NumericError("complex_roots: certified radius " + message_number(out.radius[i]) +
                         " exceeds tolerance");
    for (int j = i + 1; j < d; ++j) {
      if (std::abs(z[i] - z[j]) <= static_cast<ld>(out.radius[i]) + out.radius[j])
        throw NumericError("complex_roots: inclusion disks overlap (repeated or clustered roots)");
    }
  }
  return out;
}

}  // namespace arakelov
