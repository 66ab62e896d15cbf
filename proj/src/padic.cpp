#include "arakelov/padic.hpp"

#include <optional>

#include "arakelov/errors.hpp"
#include "arakelov/number_theory.hpp"

namespace arakelov {

int NewtonPolygonResult::total_multiplicity() const {
  int total = zero_roots;
  for (const auto& s : segments) total += s.multiplicity;
  return total;
}

Rational NewtonPolygonResult::valuation_sum() const {
  Rational sum = 0;
  for (const auto& s : segments) sum += s.valuation * static_cast<std::int64_t>(s.multiplicity);
  return sum;
}

Rational NewtonPolygonResult::negative_part_sum() const {
  Rational sum = 0;
  for (const auto& s : segments)
    if (s.valuation < 0) sum -= s.valuation * static_cast<std::int64_t>(s.multiplicity);
  return sum;
}

namespace {

void check_prime(std::int64_t p) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
}

class HenselSearch {
 public:
  HenselSearch(std::int64_t p, int precision) : p_(p), bp_(static_cast<long>(p)), precision_(precision) {}

  // Roots in Z_p of h, searched with residues known modulo p^depth.
  int count(IntPoly h, int depth) {
    poly::trim(h);
    if (h.empty()) throw DomainError("p-adic search reached the zero polynomial");
    long min_v = -1;
    for (const auto& c : h) {
      if (c == 0) continue;
      long v = valuation(c, bp_);
      if (min_v < 0 || v < min_v) min_v = v;
    }
    if (min_v > 0) {
      BigInt scale;
      mpz_pow_ui(scale.get_mpz_t(), bp_.get_mpz_t(), static_cast<unsigned long>(min_v));
      for (auto& c : h) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), scale.get_mpz_t());
    }

    std::vector<std::int64_t> reduced(h.size());
    for (std::size_t i = 0; i < h.size(); ++i)
      reduced[i] = static_cast<std::int64_t>(mpz_fdiv_ui(h[i].get_mpz_t(), static_cast<unsigned long>(p_)));
    while (!reduced.empty() && reduced.back() == 0) reduced.pop_back();
    if (reduced.size() <= 1) return 0;  // nonzero constant mod p

    int found = 0;
    for (std::int64_t a = 0; a < p_; ++a) {
      std::int64_t value = 0, slope = 0;
      for (std::size_t k = reduced.size(); k-- > 0;) {
        slope = (slope * a + value) % p_;
        value = (value * a + reduced[k]) % p_;
      }
      if (value != 0) continue;
      if (slope != 0) {
        ++found;
        continue;
      }
      if (depth >= precision_) {
        inconclusive_ = true;
        continue;
      }
      IntPoly shifted = poly::taylor_shift(h, BigInt(static_cast<long>(a)));
      BigInt power = 1;
      for (auto& c : shifted) {
        c *= power;
        power *= bp_;
      }
      found += count(std::move(shifted), depth + 1);
    }
    return found;
  }

  bool inconclusive() const { return inconclusive_; }

 private:
  std::int64_t p_;
  BigInt bp_;
  int precision_;
  bool inconclusive_ = false;
};

}  // namespace

NewtonPolygonResult newton_polygon(const PrimitivePolynomial& f, std::int64_t p) {
  check_prime(p);
  NewtonPolygonResult out;
  out.prime = p;
  const auto coeffs = f.coeffs();
  const int d = f.degree();
  std::vector<std::optional<long>> v(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i)
    if (coeffs[i] != 0) v[i] = valuation(coeffs[i], p);

  int cur = 0;
  while (!v[cur]) ++cur;
  out.zero_roots = cur;
  while (cur < d) {
    int best = -1;
    Rational best_slope;
    for (int j = cur + 1; j <= d; ++j) {
      if (!v[j]) continue;
      Rational slope(*v[j] - *v[cur], j - cur);
      if (best < 0 || slope <= best_slope) {
        best = j;
        best_slope = slope;
      }
    }
    out.segments.push_back({-best_slope, best - cur});
    cur = best;
  }
  return out;
}

PadicRootCount p_adic_root_count(const PrimitivePolynomial& f, std::int64_t p, int precision_exponent) {
  check_prime(p);
  if (p >= (std::int64_t{1} << 31)) throw DomainError("p_adic_root_count: p must be below 2^31");
  if (precision_exponent < 1) throw DomainError("p_adic_root_count: precision exponent must be positive");

  PadicRootCount out;
  out.prime = p;
  out.precision_exponent = precision_exponent;

  IntPoly g = f.int_poly();
  if (g.front() == 0) {
    out.count += 1;  // the root 0; squarefree, so a_1 != 0
    g.erase(g.begin());
  }
  HenselSearch search(p, precision_exponent);
  if (g.size() > 1) {
    out.count += search.count(g, 1);
    // Roots of negative valuation are the inverses of roots of the reversed
    // polynomial that lie in pZ_p: substitute y = p z.
    IntPoly rev(g.rbegin(), g.rend());
    BigInt power = 1, bp(static_cast<long>(p));
    for (auto& c : rev) {
      c *= power;
      power *= bp;
    }
    out.count += search.count(rev, 1);
  }
  out.status = search.inconclusive() ? RootCountStatus::Inconclusive : RootCountStatus::Certified;
  return out;
}

}  // namespace arakelov
