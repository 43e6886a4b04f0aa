#pragma once

/**
 * @file numtheory.hpp
 * @brief Integer and modular arithmetic used by every other module.
 *
 * Sizes here are desk scale (well below 2^63), so plain 64-bit integers are
 * used; products modulo p go through 128-bit intermediates.
 */

#include <cstdint>
#include <vector>

namespace circa {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes. n = 1 is the empty list.
struct Factorization {
    std::vector<PrimePower> prime_powers;

    std::uint64_t value() const;
    bool is_prime_power() const { return prime_powers.size() == 1; }
};

Factorization factorize(std::uint64_t n);

std::uint64_t totient(std::uint64_t n);

/// All positive divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Residues in [1, n] coprime to n, ascending. Requires n >= 2.
std::vector<std::uint64_t> unit_group(std::uint64_t n);

/// Deterministic: trial division below 2^20, fixed Miller-Rabin bases above.
bool is_prime(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);

/// Z_p for an odd prime p. Construction validates primality.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t p() const { return p_; }
    std::uint64_t group_order() const { return p_ - 1; }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint64_t p_;
};

/// True iff h has multiplicative order p - 1. Requires 1 <= h <= p - 1.
bool is_primitive_element(std::uint64_t h, const PrimeField& field);

/// Every generator of Z_p^*, ascending.
std::vector<std::uint64_t> primitive_elements(const PrimeField& field);

/// The smallest generator; the canonical choice everywhere else.
std::uint64_t smallest_primitive_element(const PrimeField& field);

/// dlog[x] = k with h^k = x (mod p) for x in [1, p-1]; dlog[0] is unused.
std::vector<std::uint64_t> discrete_log_table(std::uint64_t h, const PrimeField& field);

/// For prime q with p = 4q + 1 prime, reports whether 2 generates Z_p^*.
/// The answer is always true; the check guards the number theory beneath
/// the quarter-prime family. Throws InvalidInput when q or 4q + 1 is composite.
bool two_is_primitive_for_quarter_prime(std::uint64_t q);

}  // namespace circa
