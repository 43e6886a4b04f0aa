#pragma once

/**
 * @file families.hpp
 * @brief Generators and invertibility predicates for two structured families.
 *
 * Maillet-type matrices: A_{p,m}[i][j] = ((i^-1 mod p) * j mod p)^m for
 * 1 <= i, j <= p-1. Relabelling indices by discrete logarithms to a
 * primitive element h turns A_{p,m} into the circulant
 * G_{p,m,h} = circ{((h^j mod p)^m)_{j=0..p-2}}.
 *
 * Zero-one circulants: first rows with m ones and n - m zeros.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circa/circulant.hpp"
#include "circa/numtheory.hpp"

namespace circa {

class MailletSpec {
public:
    /// Uses the smallest primitive element. Throws InvalidInput unless p is
    /// an odd prime and m >= 1.
    MailletSpec(std::uint64_t p, unsigned m);
    /// Throws InvalidInput when h is not primitive modulo p.
    MailletSpec(std::uint64_t p, unsigned m, std::uint64_t h);

    const PrimeField& field() const { return field_; }
    std::uint64_t p() const { return field_.p(); }
    unsigned m() const { return m_; }
    std::uint64_t h() const { return h_; }

private:
    PrimeField field_;
    unsigned m_;
    std::uint64_t h_;
};

/// (p-1) x (p-1) integer matrix; row/column k holds index i = k + 1.
IntMatrix build_A(const MailletSpec& spec);

/// v_j = (h^j mod p)^m for j = 0..p-2.
FirstRow build_G(const MailletSpec& spec);

struct SimilarityCheck {
    bool ok = false;
    /// permutation[a] = h^a mod p: circulant index a sits at A's index
    /// permutation[a] (1-based), so (P^T A P)[a][b] = A[perm a][perm b].
    std::vector<std::uint64_t> permutation;
    BigInt det_A;
    Rational det_G;
};

/// Builds the discrete-log permutation, checks P^T A P = expand(G) entry by
/// entry and det A = det G. Limited to p <= 50.
SimilarityCheck verify_permutation_similarity(const MailletSpec& spec);

/// Dominant-entry bound: m >= log(p-2) / log((p-1)/(p-2)), decided exactly
/// as (p-1)^m >= (p-2)^(m+1). This is the threshold the invertibility
/// table uses for its diamond cells.
bool diamond_applies(std::uint64_t p, unsigned m);

/// The underlying inequality (p-1)^m - sum_{k=1}^{p-2} k^m > 0, exactly.
/// Implied by diamond_applies, and strictly weaker (e.g. p = 5, m = 2).
bool dominant_entry_inequality(std::uint64_t p, unsigned m);

/// p = 2q + 1 with q an odd prime; covers every m >= 2.
bool star_applies(std::uint64_t p);

/// r = 2^q mod p for p = 4q + 1, q an odd prime; nullopt when p is not of
/// that form.
std::optional<std::uint64_t> quarter_prime_residue(std::uint64_t p);

/// p = 4q + 1 with q an odd prime, r mod 4 in {0, 1}, m odd and >= 3.
bool star_star_applies(std::uint64_t p, unsigned m);

enum class FamilyTag : unsigned { Diamond = 1, Star = 2, StarStar = 4 };

/// Bit set of FamilyTag values.
class TagSet {
public:
    TagSet() = default;
    void insert(FamilyTag t) { bits_ |= static_cast<unsigned>(t); }
    bool contains(FamilyTag t) const { return (bits_ & static_cast<unsigned>(t)) != 0; }
    bool empty() const { return bits_ == 0; }
    /// One symbol per cell: diamond takes precedence, then star, then star-star.
    std::string display(bool unicode = true) const;
    friend bool operator==(const TagSet&, const TagSet&) = default;

private:
    unsigned bits_ = 0;
};

struct TagGrid {
    std::vector<std::uint64_t> primes;  ///< 5 <= p <= pmax, ascending
    std::vector<unsigned> exponents;    ///< 2 <= m <= mmax, ascending
    /// cells[mi][pi] for exponents[mi], primes[pi].
    std::vector<std::vector<TagSet>> cells;

    const TagSet& at(std::uint64_t p, unsigned m) const;
};

TagGrid table1(std::uint64_t pmax, unsigned mmax);

/// Renders the grid with m descending down the rows and p across, as text
/// columns or a Markdown table.
std::string render_grid(const TagGrid& grid, bool markdown);

struct QuarterPrimePair {
    std::uint64_t q;
    std::uint64_t p;
    std::uint64_t r;  ///< 2^q mod p
    bool qualifies;   ///< r mod 4 in {0, 1}
};

/// All odd primes q <= qmax with 4q + 1 prime, ascending.
std::vector<QuarterPrimePair> quarter_prime_pairs(std::uint64_t qmax);

/// n = p^t and either 1 <= m <= p-1 or 1 <= n - m <= p-1. Throws
/// InvalidInput when n is not a prime power or m is outside [1, n].
bool zeroone_guaranteed(std::uint64_t n, std::uint64_t m);

struct ZeroOneScanOptions {
    /// Exhaustive over rotation classes when true (n <= 20); otherwise
    /// `samples` uniformly random arrangements.
    bool exhaustive = true;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 20240611;
};

struct ZeroOneReport {
    std::uint64_t n = 0;
    std::uint64_t ones = 0;
    bool exhaustive = true;
    std::uint64_t tested = 0;
    std::uint64_t singular = 0;
    std::uint64_t nonsingular = 0;
    std::uint64_t decided_by_screen = 0;
    /// zeroone_guaranteed(n, ones), or nullopt when n is not a prime power.
    std::optional<bool> guaranteed;
    /// Positions of ones for the lexicographically first singular class found.
    std::optional<std::vector<std::uint64_t>> first_singular;

    /// False only if the guarantee holds and a singular arrangement appeared.
    bool consistent() const { return !(guaranteed.value_or(false) && singular > 0); }
};

/// Rotates a 0/1 pattern to its lexicographically smallest rotation.
std::vector<std::uint8_t> canonical_rotation(const std::vector<std::uint8_t>& pattern);

ZeroOneReport zeroone_scan(std::uint64_t n, std::uint64_t ones,
                           const ZeroOneScanOptions& options = {});

FirstRow zeroone_row(std::uint64_t n, const std::vector<std::uint64_t>& positions);

}  // namespace circa
