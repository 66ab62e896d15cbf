#include "arakelov/bounds.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include "arakelov/errors.hpp"
#include "arakelov/number_theory.hpp"

namespace arakelov {

namespace {

std::string term_symbol(std::int64_t p) {
  const std::string ps = std::to_string(p);
  return "1/2 * " + ps + " log " + ps + " / " + std::to_string(p * p - 1);
}

BoundResult with_terms(const PlaceSet& s, BoundBase base, double base_value, std::string symbol) {
  BoundResult out;
  out.base = base;
  out.base_value = base_value;
  out.base_symbolic = std::move(symbol);
  double total = base_value;
  for (std::int64_t p : s.primes()) {
    const double t = 0.5 * nonarch_term(p);
    out.terms.push_back({p, t, term_symbol(p)});
    total += t;
  }
  out.value = total;
  out.beats_elementary = total > elementary_bound();
  return out;
}

// Half the gap left between the quarter base and 1/2 log 2, which a pair
// of finite places must exceed with its two half-terms.
double pair_threshold() { return elementary_bound() - 0.25; }

}  // namespace

PlaceSet::PlaceSet(bool includes_infinity, std::vector<std::int64_t> primes)
    : infinity_(includes_infinity), primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (!is_prime(primes_[i])) throw DomainError(std::to_string(primes_[i]) + " is not a prime");
    if (i > 0 && primes_[i] == primes_[i - 1]) throw DomainError("repeated place " + std::to_string(primes_[i]));
  }
}

PlaceSet PlaceSet::parse(std::string_view text) {
  bool inf = false;
  std::vector<std::int64_t> primes;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) {
      if (end != text.size() || pos != 0) throw ParseError("empty entry in place list");
    } else if (item == "inf" || item == "infinity") {
      if (inf) throw DomainError("repeated place inf");
      inf = true;
    } else {
      std::int64_t p = 0;
      const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), p);
      if (ec != std::errc() || ptr != item.data() + item.size()) {
        throw ParseError("bad place '" + std::string(item) + "'");
      }
      primes.push_back(p);
    }
    pos = end + 1;
  }
  return PlaceSet(inf, std::move(primes));
}

bool PlaceSet::contains(std::int64_t p) const { return std::binary_search(primes_.begin(), primes_.end(), p); }

PlaceSet PlaceSet::with_prime(std::int64_t p) const {
  std::vector<std::int64_t> next = primes_;
  next.push_back(p);
  return PlaceSet(infinity_, std::move(next));
}

std::string PlaceSet::label() const {
  std::string out = infinity_ ? "inf" : "";
  for (std::int64_t p : primes_) out += (out.empty() ? "" : ",") + std::to_string(p);
  return out.empty() ? "{}" : out;
}

std::string base_name(BoundBase b) {
  switch (b) {
    case BoundBase::Quarter: return "quarter";
    case BoundBase::HalfLog2: return "half_log2";
    case BoundBase::Interval: return "interval";
  }
  return "";
}

double elementary_bound() { return 0.5 * std::numbers::ln2; }

double nonarch_term(std::int64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not a prime");
  const double x = static_cast<double>(p);
  return x * std::log(x) / ((x - 1.0) * (x + 1.0));
}

BoundResult lower_bound(const PlaceSet& s) {
  if (s.includes_infinity()) return with_terms(s, BoundBase::HalfLog2, elementary_bound(), "1/2 log 2");
  return with_terms(s, BoundBase::Quarter, 0.25, "1/4");
}

BoundResult lower_bound_interval(const PlaceSet& s, double r) {
  if (!s.includes_infinity()) throw DomainError("the interval bound needs inf in S");
  if (!(std::isfinite(r) && r > 0.0)) throw DomainError("r must be positive and finite");
  const double arch = 0.5 * (std::numbers::ln2 + 0.5 * std::log1p(1.0 / (r * r)));
  BoundResult out = with_terms(s, BoundBase::Interval, arch, "1/2 log(2 sqrt(r^2+1)/r)");
  out.r = r;
  return out;
}

std::vector<std::int64_t> single_place_beaters() {
  const double need = pair_threshold();
  std::vector<std::int64_t> out;
  // t(p) decreases for p >= 3, so the scan can stop at the first odd failure.
  for (std::int64_t p = 2;; p = next_prime(p)) {
    const double half = 0.5 * nonarch_term(p);
    if (half > need) {
      out.push_back(p);
    } else if (p >= 3) {
      break;
    }
  }
  return out;
}

PairCensus count_beating_pairs() {
  const double need = pair_threshold();
  PairCensus census;
  census.always_beat = single_place_beaters();
  const std::int64_t first = next_prime(census.always_beat.back());

  auto beats = [need](std::int64_t p, std::int64_t q) { return 0.5 * (nonarch_term(p) + nonarch_term(q)) > need; };
  for (std::int64_t q = next_prime(first); beats(first, q); q = next_prime(q)) census.cutoff = q;

  for (std::int64_t p = first; p < census.cutoff; p = next_prime(p)) {
    for (std::int64_t q = next_prime(p); q <= census.cutoff && beats(p, q); q = next_prime(q)) {
      census.witnesses.emplace_back(p, q);
    }
  }
  return census;
}

QuadratureResult chebyshev_limit_integral(const QuadratureOptions& opt) {
  // x = 2 sin(theta) removes the endpoint singularity.
  return gauss_legendre(
      [](double theta) {
        const double x = 2.0 * std::sin(theta);
        return 0.5 * std::log1p(x * x) / std::numbers::pi;
      },
      -0.5 * std::numbers::pi, 0.5 * std::numbers::pi, opt);
}

}  // namespace arakelov
