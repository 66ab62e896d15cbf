#pragma once

// Lower bounds for the liminf of the Arakelov height over points that are
// totally v-adic for every v in a set S of places, and the prime censuses
// comparing them with the elementary bound 1/2 log 2.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arakelov/quadrature.hpp"

namespace arakelov {

class PlaceSet {
 public:
  PlaceSet() = default;
  /// Throws DomainError on a non-prime or repeated prime.
  PlaceSet(bool includes_infinity, std::vector<std::int64_t> primes);

  /// Comma-separated list such as "inf,2,3"; "" is the empty set.
  static PlaceSet parse(std::string_view text);

  bool includes_infinity() const { return infinity_; }
  const std::vector<std::int64_t>& primes() const { return primes_; }
  bool contains(std::int64_t p) const;
  PlaceSet with_prime(std::int64_t p) const;
  std::string label() const;

 private:
  bool infinity_ = false;
  std::vector<std::int64_t> primes_;
};

enum class BoundBase { Quarter, HalfLog2, Interval };
std::string base_name(BoundBase b);

struct BoundTerm {
  std::int64_t prime = 0;
  double value = 0.0;
  std::string symbolic;
};

struct BoundResult {
  BoundBase base = BoundBase::Quarter;
  std::optional<double> r;
  double base_value = 0.0;
  std::string base_symbolic;
  std::vector<BoundTerm> terms;  // ascending primes
  double value = 0.0;            // base_value + terms, summed in that order
  bool beats_elementary = false;  // value > 1/2 log 2
};

/// The elementary bound 1/2 log 2.
double elementary_bound();

/// p log p / (p^2 - 1). Throws DomainError unless p is prime.
double nonarch_term(std::int64_t p);

BoundResult lower_bound(const PlaceSet& s);

/// Points in [-r, r]; requires inf in S and r > 0.
BoundResult lower_bound_interval(const PlaceSet& s, double r);

/// Primes p with 1/4 + nonarch_term(p)/2 > 1/2 log 2.
std::vector<std::int64_t> single_place_beaters();

struct PairCensus {
  std::int64_t cutoff = 0;  // largest q admissible next to p = 17
  std::vector<std::pair<std::int64_t, std::int64_t>> witnesses;  // 13 < p < q
  std::vector<std::int64_t> always_beat;  // p making every {p, q} beat
  std::size_t count() const { return witnesses.size(); }
};

/// Pairs {p, q}, 13 < p < q, with 1/4 + (t(p) + t(q))/2 > 1/2 log 2.
PairCensus count_beating_pairs();

/// integral over [-2, 2] of log sqrt(1+x^2) / (pi sqrt(4-x^2)) dx.
QuadratureResult chebyshev_limit_integral(const QuadratureOptions& opt = {});

}  // namespace arakelov
