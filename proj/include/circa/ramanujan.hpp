#pragma once

#include <cstdint>

#include "circa/polynomial.hpp"

namespace circa {

/// Phi_d, computed as (x^d - 1) divided exactly by Phi_e for every proper
/// divisor e of d. Memoized per process; the cache is mutex-guarded and the
/// returned reference stays valid for the life of the process.
const IntPolynomial& cyclotomic(std::uint64_t d);

/// C_d(n), the sum of n-th powers of the primitive d-th roots of unity.
/// Evaluated as a product over the prime-power parts of d; C_d(0) = phi(d).
std::int64_t ramanujan_sum(std::uint64_t d, std::uint64_t n);

/// Independent route to C_d(n): reduce sum_{a in U(d)} x^{a n mod d} modulo
/// Phi_d. The residue must be a constant, which is returned. A non-constant
/// residue throws InternalInconsistency.
std::int64_t ramanujan_sum_oracle(std::uint64_t d, std::uint64_t n);

}  // namespace circa
