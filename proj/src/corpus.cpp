#include "arakelov/corpus.hpp"

#include "arakelov/errors.hpp"

namespace arakelov {

std::int64_t uniform_int(std::mt19937_64& eng, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw DomainError("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(eng());
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t x;
  do {
    x = eng();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

std::vector<PrimitivePolynomial> random_corpus(std::size_t count, std::uint64_t seed, const CorpusSpec& spec) {
  if (spec.min_degree < 1 || spec.max_degree < spec.min_degree || spec.coefficient_bound < 1) {
    throw DomainError("random_corpus: bad spec");
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 0x636fu};
  std::mt19937_64 eng(seq);
  const long b = spec.coefficient_bound;
  auto nonzero = [&] {
    std::int64_t c = 0;
    while (c == 0) c = uniform_int(eng, -b, b);
    return c;
  };

  std::vector<PrimitivePolynomial> out;
  out.reserve(count);
  while (out.size() < count) {
    const int d = static_cast<int>(uniform_int(eng, spec.min_degree, spec.max_degree));
    std::vector<BigInt> c(static_cast<std::size_t>(d) + 1);
    c[0] = static_cast<long>(nonzero());
    for (int i = 1; i < d; ++i) c[i] = static_cast<long>(uniform_int(eng, -b, b));
    c[d] = static_cast<long>(nonzero());
    try {
      out.push_back(PrimitivePolynomial::from_coefficients(std::move(c)));
    } catch (const DomainError&) {
    }
  }
  return out;
}

}  // namespace arakelov
