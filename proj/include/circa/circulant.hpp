#pragma once

/**
 * @file circulant.hpp
 * @brief Circulant matrices over Q: representation, exact determinants and
 * the exact singularity oracle.
 *
 * circ{v} has entry (i, j) = v[(j - i) mod n]. Its eigenvalues are f(eps^l)
 * for the associated polynomial f(x) = sum_j v_j x^j and eps a primitive
 * n-th root of unity, so circ{v} is singular exactly when some Phi_d with
 * d | n divides f.
 */

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "circa/polynomial.hpp"

namespace circa {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Parses `a`, `-a`, `a/b` (b nonzero), surrounding whitespace allowed.
/// Throws InvalidInput on anything else.
Rational parse_rational(std::string_view text);

/// Canonical string: `a` for integers, `a/b` otherwise.
std::string format_rational(const Rational& value);

/// First row of a circulant matrix. Immutable; entries are canonical fractions.
class FirstRow {
public:
    explicit FirstRow(std::vector<Rational> entries);

    /// Comma-separated rationals, e.g. "1,2/3,-5".
    static FirstRow parse(std::string_view text);

    template <typename Int>
    static FirstRow from_integers(std::span<const Int> values) {
        std::vector<Rational> v;
        v.reserve(values.size());
        for (const auto& x : values) v.emplace_back(x);
        return FirstRow(std::move(v));
    }

    std::size_t size() const { return entries_.size(); }
    const std::vector<Rational>& entries() const { return entries_; }
    const Rational& operator[](std::size_t j) const { return entries_[j]; }

    /// (v_k, v_{k+1}, ..., v_{k-1}), indices mod n.
    FirstRow rotated(std::size_t k) const;

    std::string to_string() const;

    friend bool operator==(const FirstRow&, const FirstRow&) = default;

private:
    std::vector<Rational> entries_;
};

/// f(x) = poly(x) / scale with integer poly and positive integer scale.
struct AssociatedPolynomial {
    IntPolynomial poly;
    BigInt scale;
};

AssociatedPolynomial associated_polynomial(const FirstRow& row);

RationalMatrix expand(const FirstRow& row);

/// Fraction-free elimination with row swaps on an integer matrix.
BigInt det_bareiss(IntMatrix matrix);

/// Denominators cleared once, integer Bareiss, then rescaled by scale^-n.
Rational det_bareiss(const FirstRow& row);

/// prod_{d | n} Res(Phi_d, f), each resultant exact.
Rational det_resultant(const FirstRow& row);

/// True iff lambda_l = f(eps^l) = 0, i.e. Phi_{n / gcd(n, l)} divides f.
bool eigenvalue_is_zero(const FirstRow& row, std::size_t l);

/// True iff Phi_d divides f. d need not divide n.
bool cyclotomic_divides(const AssociatedPolynomial& f, std::uint64_t d);

struct SingularityResult {
    bool singular = false;
    /// Smallest d | n with Phi_d | f, when singular.
    std::optional<std::uint64_t> witness;
};

SingularityResult is_singular_exact(const FirstRow& row);

/// CSV of expand(row): one matrix row per line.
std::string to_csv(const RationalMatrix& matrix);

/// Floating-point eigenvalues for display only. Nothing in the library
/// decides anything from these.
std::vector<std::complex<double>> approximate_eigenvalues(const FirstRow& row);

}  // namespace circa
