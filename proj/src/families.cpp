#include "circa/families.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "circa/conditions.hpp"
#include "circa/errors.hpp"
#include "circa/parallel.hpp"

namespace circa {

namespace {

BigInt big_pow(std::uint64_t base, unsigned exp) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
    return out;
}

PrimeField checked_field(std::uint64_t p, unsigned m) {
    if (m < 1) throw InvalidInput("exponent m must be at least 1");
    return PrimeField(p);
}

}  // namespace

MailletSpec::MailletSpec(std::uint64_t p, unsigned m)
    : field_(checked_field(p, m)), m_(m), h_(smallest_primitive_element(field_)) {}

MailletSpec::MailletSpec(std::uint64_t p, unsigned m, std::uint64_t h)
    : field_(checked_field(p, m)), m_(m), h_(h) {
    if (h < 1 || h >= p || !is_primitive_element(h, field_)) {
        throw InvalidInput(std::to_string(h) + " is not a primitive element modulo " +
                           std::to_string(p));
    }
}

IntMatrix build_A(const MailletSpec& spec) {
    const std::uint64_t p = spec.p();
    IntMatrix a(p - 1, std::vector<BigInt>(p - 1));
    for (std::uint64_t i = 1; i < p; ++i) {
        const std::uint64_t inv = inverse_mod(i, p);
        for (std::uint64_t j = 1; j < p; ++j) a[i - 1][j - 1] = big_pow(mul_mod(inv, j, p), spec.m());
    }
    return a;
}

FirstRow build_G(const MailletSpec& spec) {
    const std::uint64_t p = spec.p();
    std::vector<Rational> v;
    v.reserve(p - 1);
    std::uint64_t x = 1;
    for (std::uint64_t j = 0; j + 1 < p; ++j) {
        v.emplace_back(big_pow(x, spec.m()));
        x = mul_mod(x, spec.h(), p);
    }
    return FirstRow(std::move(v));
}

SimilarityCheck verify_permutation_similarity(const MailletSpec& spec) {
    const std::uint64_t p = spec.p();
    if (p > 50) throw InvalidInput("verify_permutation_similarity is limited to p <= 50");
    const std::size_t n = p - 1;
    const IntMatrix a = build_A(spec);
    const FirstRow g = build_G(spec);

    SimilarityCheck check;
    check.permutation.resize(n);
    std::uint64_t x = 1;
    for (std::size_t k = 0; k < n; ++k) {
        check.permutation[k] = x;
        x = mul_mod(x, spec.h(), p);
    }
    // The relabelling is a bijection onto 1..p-1 exactly when h is primitive.
    std::vector<bool> seen(p, false);
    for (std::uint64_t i : check.permutation) seen[i] = true;
    check.ok = std::count(seen.begin() + 1, seen.end(), true) == static_cast<long>(n);

    const RationalMatrix circ = expand(g);
    for (std::size_t r = 0; check.ok && r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const BigInt& entry = a[check.permutation[r] - 1][check.permutation[c] - 1];
            if (Rational(entry) != circ[r][c]) {
                check.ok = false;
                break;
            }
        }
    }
    check.det_A = det_bareiss(a);
    check.det_G = det_bareiss(g);
    check.ok = check.ok && Rational(check.det_A) == check.det_G;
    return check;
}

bool diamond_applies(std::uint64_t p, unsigned m) {
    if (p < 3) throw InvalidInput("p must be an odd prime");
    if (p == 3) return true;  // log(1) = 0: every m qualifies
    return big_pow(p - 1, m) >= big_pow(p - 2, m + 1);
}

bool dominant_entry_inequality(std::uint64_t p, unsigned m) {
    BigInt rest = 0;
    for (std::uint64_t k = 1; k + 2 <= p; ++k) rest += big_pow(k, m);
    return big_pow(p - 1, m) - rest > 0;
}

bool star_applies(std::uint64_t p) {
    if (p < 3 || (p - 1) % 2 != 0) return false;
    const std::uint64_t q = (p - 1) / 2;
    return q % 2 == 1 && is_prime(q);
}

std::optional<std::uint64_t> quarter_prime_residue(std::uint64_t p) {
    if (p < 5 || (p - 1) % 4 != 0) return std::nullopt;
    const std::uint64_t q = (p - 1) / 4;
    if (q % 2 == 0 || !is_prime(q) || !is_prime(p)) return std::nullopt;
    return pow_mod(2, q, p);
}

bool star_star_applies(std::uint64_t p, unsigned m) {
    if (m < 3 || m % 2 == 0) return false;
    const auto r = quarter_prime_residue(p);
    return r && (*r % 4 == 0 || *r % 4 == 1);
}

std::string TagSet::display(bool unicode) const {
    if (contains(FamilyTag::Diamond)) return unicode ? "⋄" : "D";
    if (contains(FamilyTag::Star)) return unicode ? "★" : "*";
    if (contains(FamilyTag::StarStar)) return unicode ? "★★" : "**";
    return "";
}

const TagSet& TagGrid::at(std::uint64_t p, unsigned m) const {
    const auto pi = std::find(primes.begin(), primes.end(), p);
    const auto mi = std::find(exponents.begin(), exponents.end(), m);
    if (pi == primes.end() || mi == exponents.end()) throw InvalidInput("cell outside the grid");
    return cells[static_cast<std::size_t>(mi - exponents.begin())]
                [static_cast<std::size_t>(pi - primes.begin())];
}

TagGrid table1(std::uint64_t pmax, unsigned mmax) {
    if (pmax < 5 || mmax < 2) throw InvalidInput("table1 needs pmax >= 5 and mmax >= 2");
    TagGrid grid;
    for (std::uint64_t p = 5; p <= pmax; p += 2) {
        if (is_prime(p)) grid.primes.push_back(p);
    }
    for (unsigned m = 2; m <= mmax; ++m) grid.exponents.push_back(m);
    grid.cells.assign(grid.exponents.size(), std::vector<TagSet>(grid.primes.size()));
    for (std::size_t mi = 0; mi < grid.exponents.size(); ++mi) {
        for (std::size_t pi = 0; pi < grid.primes.size(); ++pi) {
            const std::uint64_t p = grid.primes[pi];
            const unsigned m = grid.exponents[mi];
            TagSet& cell = grid.cells[mi][pi];
            if (diamond_applies(p, m)) cell.insert(FamilyTag::Diamond);
            if (star_applies(p)) cell.insert(FamilyTag::Star);
            if (star_star_applies(p, m)) cell.insert(FamilyTag::StarStar);
        }
    }
    return grid;
}

std::string render_grid(const TagGrid& grid, bool markdown) {
    std::ostringstream os;
    auto cell_text = [&](const TagSet& t) { return t.display(markdown); };
    if (markdown) {
        os << "| m \\ p |";
        for (auto p : grid.primes) os << ' ' << p << " |";
        os << "\n|---|";
        for (std::size_t i = 0; i < grid.primes.size(); ++i) os << "---|";
        os << '\n';
        for (std::size_t mi = grid.exponents.size(); mi-- > 0;) {
            os << "| " << grid.exponents[mi] << " |";
            for (const auto& c : grid.cells[mi]) os << ' ' << cell_text(c) << " |";
            os << '\n';
        }
        return os.str();
    }
    auto pad = [](std::string s, std::size_t width) {
        if (s.size() < width) s.append(width - s.size(), ' ');
        return s;
    };
    os << pad("m\\p", 5);
    for (auto p : grid.primes) os << pad(std::to_string(p), 4);
    os << '\n';
    for (std::size_t mi = grid.exponents.size(); mi-- > 0;) {
        os << pad(std::to_string(grid.exponents[mi]), 5);
        for (const auto& c : grid.cells[mi]) os << pad(c.empty() ? "." : c.display(false), 4);
        os << '\n';
    }
    return os.str();
}

std::vector<QuarterPrimePair> quarter_prime_pairs(std::uint64_t qmax) {
    std::vector<QuarterPrimePair> out;
    for (std::uint64_t q = 3; q <= qmax; q += 2) {
        if (!is_prime(q) || !is_prime(4 * q + 1)) continue;
        const std::uint64_t p = 4 * q + 1;
        const std::uint64_t r = pow_mod(2, q, p);
        out.push_back({q, p, r, r % 4 == 0 || r % 4 == 1});
    }
    return out;
}

bool zeroone_guaranteed(std::uint64_t n, std::uint64_t m) {
    if (n < 2) throw InvalidInput("n must be a prime power >= 2");
    const Factorization f = factorize(n);
    if (!f.is_prime_power()) throw InvalidInput(std::to_string(n) + " is not a prime power");
    if (m < 1 || m > n) throw InvalidInput("number of ones must lie in [1, n]");
    const std::uint64_t p = f.prime_powers[0].prime;
    return m <= p - 1 || (n - m >= 1 && n - m <= p - 1);
}

std::vector<std::uint8_t> canonical_rotation(const std::vector<std::uint8_t>& pattern) {
    std::vector<std::uint8_t> best = pattern;
    std::vector<std::uint8_t> candidate(pattern.size());
    for (std::size_t k = 1; k < pattern.size(); ++k) {
        std::rotate_copy(pattern.begin(), pattern.begin() + static_cast<long>(k), pattern.end(),
                         candidate.begin());
        if (candidate < best) best = candidate;
    }
    return best;
}

FirstRow zeroone_row(std::uint64_t n, const std::vector<std::uint64_t>& positions) {
    std::vector<Rational> v(n, Rational(0));
    for (std::uint64_t i : positions) {
        if (i >= n) throw InvalidInput("position outside the row");
        v[i] = 1;
    }
    return FirstRow(std::move(v));
}

ZeroOneReport zeroone_scan(std::uint64_t n, std::uint64_t ones, const ZeroOneScanOptions& options) {
    if (n < 1 || ones < 1 || ones > n) throw InvalidInput("need 1 <= ones <= n");
    if (options.exhaustive && n > 20) {
        throw InvalidInput("exhaustive scans are limited to n <= 20; use sampling");
    }
    ZeroOneReport report;
    report.n = n;
    report.ones = ones;
    report.exhaustive = options.exhaustive;
    const Factorization f = factorize(n);
    if (f.is_prime_power()) report.guaranteed = zeroone_guaranteed(n, ones);

    // Patterns are 0/1 vectors; with ones placed first, descending
    // lexicographic order by prev_permutation enumerates every subset once.
    std::vector<std::vector<std::uint8_t>> patterns;
    if (options.exhaustive) {
        std::vector<std::uint8_t> pattern(n, 0);
        std::fill(pattern.begin(), pattern.begin() + static_cast<long>(ones), 1);
        do {
            if (canonical_rotation(pattern) == pattern) patterns.push_back(pattern);
        } while (std::prev_permutation(pattern.begin(), pattern.end()));
    } else {
        std::mt19937_64 rng(options.seed);
        std::vector<std::uint8_t> pattern(n, 0);
        std::fill(pattern.begin(), pattern.begin() + static_cast<long>(ones), 1);
        for (std::uint64_t s = 0; s < options.samples; ++s) {
            std::shuffle(pattern.begin(), pattern.end(), rng);
            patterns.push_back(canonical_rotation(pattern));
        }
    }

    const auto conditions = generate_conditions(n);
    std::vector<std::uint8_t> singular(patterns.size(), 0);
    std::vector<std::uint8_t> by_screen(patterns.size(), 0);
    parallel_for(patterns.size(), [&](std::size_t i) {
        std::vector<Rational> v(patterns[i].begin(), patterns[i].end());
        const Certificate cert = decide(FirstRow(std::move(v)), conditions);
        singular[i] = cert.verdict == Verdict::Singular;
        by_screen[i] = cert.path == DecisionPath::Screen;
    });

    report.tested = patterns.size();
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        report.decided_by_screen += by_screen[i];
        if (!singular[i]) {
            ++report.nonsingular;
            continue;
        }
        ++report.singular;
        std::vector<std::uint64_t> positions;
        for (std::uint64_t j = 0; j < n; ++j) {
            if (patterns[i][j]) positions.push_back(j);
        }
        if (!report.first_singular || positions < *report.first_singular) {
            report.first_singular = std::move(positions);
        }
    }
    return report;
}

}  // namespace circa
