#pragma once

#include <cstdint>
#include <vector>

#include "arakelov/polynomial.hpp"

namespace arakelov {

/// The n-th cyclotomic polynomial, from prod_{m | n} (x^m - 1)^{mu(n/m)}.
IntPoly cyclotomic_polynomial(std::int64_t n);

/// All n with phi(n) <= bound, ascending. Uses the cover n <= 2 bound^2 + 6.
std::vector<std::int64_t> orders_with_totient_at_most(std::int64_t bound);

/// True iff every root of f is a root of unity. Exact: f must be monic and
/// equal to a product of distinct Phi_n, which is decided by trial division
/// by every Phi_n with phi(n) <= deg f.
bool is_cyclotomic(const PrimitivePolynomial& f);

}  // namespace arakelov
