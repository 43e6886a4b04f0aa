#pragma once

/**
 * @file conditions.hpp
 * @brief Divisor-indexed Ramanujan conditions and the invertibility screen.
 *
 * For every d | n the condition sum_j C_d(j) v_j = 0 is necessary for
 * lambda_l = 0 at any l with n / gcd(n, l) = d. If no condition vanishes the
 * matrix is certified nonsingular. A vanishing condition proves nothing on
 * its own; decide() settles those rows with the exact cyclotomic oracle.
 *
 * Every condition is stored in "left minus right" form, coeffs . v = 0.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circa/circulant.hpp"

namespace circa {

struct DivisorCondition {
    std::uint64_t n = 0;
    std::uint64_t d = 0;
    /// (C_d(0), ..., C_d(n-1)); d-periodic, coeffs[0] = phi(d).
    std::vector<std::int64_t> coeffs;

    Rational evaluate(const FirstRow& row) const;

    friend bool operator==(const DivisorCondition&, const DivisorCondition&) = default;
};

/// One condition per divisor of n, ascending in d; d = 1 is the row sum.
std::vector<DivisorCondition> generate_conditions(std::uint64_t n);

enum class ScreenOutcome { CertifiedNonsingular, Unknown };

struct ScreenVerdict {
    ScreenOutcome outcome = ScreenOutcome::Unknown;
    /// Divisors whose condition evaluates to zero, ascending.
    std::vector<std::uint64_t> vanishing;
    /// (d, sum_j C_d(j) v_j) for every d | n, ascending.
    std::vector<std::pair<std::uint64_t, Rational>> values;
};

ScreenVerdict screen(const FirstRow& row);
ScreenVerdict screen(const FirstRow& row, const std::vector<DivisorCondition>& conditions);

enum class Verdict { Nonsingular, Singular };

enum class DecisionPath {
    Screen,          ///< every condition nonzero
    VanishingCheck,  ///< Phi_d | f found among the vanishing divisors
    FullOracle,      ///< nothing divides f; exact oracle confirms nonsingular
};

struct Certificate {
    FirstRow row;
    ScreenVerdict screen;
    Verdict verdict = Verdict::Nonsingular;
    DecisionPath path = DecisionPath::Screen;
    std::optional<std::uint64_t> witness_d;
    std::optional<Rational> determinant;
};

/// Screen first; on Unknown test Phi_d | f for vanishing d, then fall back to
/// is_singular_exact. A singular witness with a nonvanishing condition would
/// contradict the screen's soundness and throws InternalInconsistency.
/// With `with_determinant` the Bareiss determinant is attached and checked
/// against the verdict.
Certificate decide(const FirstRow& row, bool with_determinant = false);
Certificate decide(const FirstRow& row, const std::vector<DivisorCondition>& conditions,
                   bool with_determinant = false);

std::string to_string(Verdict v);
std::string to_string(DecisionPath p);
std::string to_string(ScreenOutcome o);

/// Complete classification for prime n: singular iff the row sums to zero or
/// all entries are equal. Throws InvalidInput for composite n.
Verdict classify_prime(const FirstRow& row);

// ---------------------------------------------------------------------------
// Hand-derived condition templates for structured sizes.

enum class SizeShape {
    Prime,                    ///< n = q
    OddPrimePower,            ///< n = q^k, k >= 2
    PowerOfTwo,               ///< n = 2^k, k >= 2
    TwiceOddPrime,            ///< n = 2q
    TwiceOddPrimePower,       ///< n = 2q^k, k >= 2
    PowerOfTwoTimesOddPrime,  ///< n = 2^k q, k >= 2
    TwiceTwoOddPrimes,        ///< n = 2qr, q < r
};

std::string to_string(SizeShape s);

struct TemplateCondition {
    std::uint64_t d = 0;
    /// Human-readable identity, e.g. "(q-1)(v_0+v_q) = sum_{j=1}^{q-1}(v_j+v_{q+j})".
    std::string identity;
    /// Left minus right of the identity as used by the screen.
    std::vector<std::int64_t> coeffs;
    /// The identity exactly as conventionally printed, when it differs from
    /// `coeffs`; `correction` says what was changed.
    std::optional<std::vector<std::int64_t>> printed;
    std::string correction;
};

struct TemplateCatalog {
    std::uint64_t n = 0;
    SizeShape shape = SizeShape::Prime;
    std::uint64_t q = 0;  ///< odd prime (or 2 for n = 2)
    std::uint64_t r = 0;  ///< second odd prime, TwiceTwoOddPrimes only
    unsigned k = 0;       ///< exponent where the shape has one
    std::vector<TemplateCondition> conditions;
};

/// Catalog for n of one of the shapes above, nullopt otherwise (including
/// n = 1 and odd squarefree n = qr).
std::optional<TemplateCatalog> template_conditions(std::uint64_t n);

struct TemplateMatchReport {
    std::uint64_t n = 0;
    bool matches = false;
    /// One line per template condition that is not a nonzero multiple of the
    /// generic condition with the same d; names d and the first bad index.
    std::vector<std::string> mismatches;
    /// One line per printed identity that had to be corrected, naming the
    /// first index where the printed form departs from C_d(j).
    std::vector<std::string> printed_discrepancies;
};

/// Compares every template against generate_conditions(n): vectors must be
/// proportional (left/right side moves, overall sign and a common factor
/// such as q^(t-1) that the hand derivation divides out). Throws
/// InvalidInput when n has no template.
TemplateMatchReport templates_match_generic(std::uint64_t n);

/// First index where a and b fail to be proportional by a nonzero factor,
/// or nullopt when they are.
std::optional<std::size_t> first_nonproportional_index(const std::vector<std::int64_t>& a,
                                                       const std::vector<std::int64_t>& b);

}  // namespace circa
