#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "arakelov/polynomial.hpp"

namespace arakelov {

struct CorpusSpec {
  int min_degree = 1;
  int max_degree = 8;
  long coefficient_bound = 50;
};

/// Uniform integer in [lo, hi] by rejection, independent of the standard
/// library's distribution implementation.
std::int64_t uniform_int(std::mt19937_64& eng, std::int64_t lo, std::int64_t hi);

/// Random primitive squarefree polynomials with a_d != 0 and a_0 != 0.
/// Draws that fail the squarefree test are discarded and redrawn.
std::vector<PrimitivePolynomial> random_corpus(std::size_t count, std::uint64_t seed, const CorpusSpec& spec = {});

}  // namespace arakelov
