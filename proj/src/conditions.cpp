#include "circa/conditions.hpp"

#include <algorithm>

#include "circa/errors.hpp"
#include "circa/numtheory.hpp"
#include "circa/ramanujan.hpp"

namespace circa {

namespace {
__extension__ typedef __int128 int128;
}  // namespace

Rational DivisorCondition::evaluate(const FirstRow& row) const {
    if (row.size() != coeffs.size()) throw InvalidInput("condition size does not match row size");
    Rational acc = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] != 0) acc += Rational(coeffs[j]) * row[j];
    }
    return acc;
}

std::vector<DivisorCondition> generate_conditions(std::uint64_t n) {
    if (n == 0) throw InvalidInput("generate_conditions: n must be positive");
    std::vector<DivisorCondition> out;
    for (std::uint64_t d : divisors(n)) {
        DivisorCondition c{n, d, std::vector<std::int64_t>(n)};
        for (std::uint64_t j = 0; j < d && j < n; ++j) c.coeffs[j] = ramanujan_sum(d, j);
        for (std::uint64_t j = d; j < n; ++j) c.coeffs[j] = c.coeffs[j - d];
        out.push_back(std::move(c));
    }
    return out;
}

ScreenVerdict screen(const FirstRow& row, const std::vector<DivisorCondition>& conditions) {
    ScreenVerdict v;
    for (const auto& c : conditions) {
        Rational value = c.evaluate(row);
        if (value == 0) v.vanishing.push_back(c.d);
        v.values.emplace_back(c.d, std::move(value));
    }
    v.outcome = v.vanishing.empty() ? ScreenOutcome::CertifiedNonsingular : ScreenOutcome::Unknown;
    return v;
}

ScreenVerdict screen(const FirstRow& row) { return screen(row, generate_conditions(row.size())); }

Certificate decide(const FirstRow& row, const std::vector<DivisorCondition>& conditions,
                   bool with_determinant) {
    Certificate cert{row, screen(row, conditions), Verdict::Nonsingular, DecisionPath::Screen,
                     std::nullopt, std::nullopt};
    if (cert.screen.outcome == ScreenOutcome::CertifiedNonsingular) {
        cert.verdict = Verdict::Nonsingular;
        cert.path = DecisionPath::Screen;
    } else {
        const AssociatedPolynomial f = associated_polynomial(row);
        for (std::uint64_t d : cert.screen.vanishing) {
            if (cyclotomic_divides(f, d)) {
                cert.verdict = Verdict::Singular;
                cert.path = DecisionPath::VanishingCheck;
                cert.witness_d = d;
                break;
            }
        }
        if (!cert.witness_d) {
            const SingularityResult exact = is_singular_exact(row);
            if (exact.singular) {
                throw InternalInconsistency("Phi_" + std::to_string(*exact.witness) +
                                            " divides f but its condition does not vanish for " +
                                            row.to_string());
            }
            cert.verdict = Verdict::Nonsingular;
            cert.path = DecisionPath::FullOracle;
        }
    }
    if (with_determinant) {
        cert.determinant = det_bareiss(row);
        if ((*cert.determinant == 0) != (cert.verdict == Verdict::Singular)) {
            throw InternalInconsistency("determinant " + format_rational(*cert.determinant) +
                                        " contradicts verdict for " + row.to_string());
        }
    } else if (cert.verdict == Verdict::Singular) {
        cert.determinant = Rational(0);
    }
    return cert;
}

Certificate decide(const FirstRow& row, bool with_determinant) {
    return decide(row, generate_conditions(row.size()), with_determinant);
}

std::string to_string(Verdict v) { return v == Verdict::Singular ? "SINGULAR" : "NONSINGULAR"; }

std::string to_string(DecisionPath p) {
    switch (p) {
        case DecisionPath::Screen: return "screen";
        case DecisionPath::VanishingCheck: return "vanishing-check";
        case DecisionPath::FullOracle: return "oracle";
    }
    return "?";
}

std::string to_string(ScreenOutcome o) {
    return o == ScreenOutcome::CertifiedNonsingular ? "certified-nonsingular" : "unknown";
}

Verdict classify_prime(const FirstRow& row) {
    if (!is_prime(row.size())) {
        throw InvalidInput("classify_prime: size " + std::to_string(row.size()) + " is not prime");
    }
    Rational sum = 0;
    for (const auto& v : row.entries()) sum += v;
    const bool all_equal = std::all_of(row.entries().begin(), row.entries().end(),
                                       [&](const Rational& v) { return v == row[0]; });
    return (sum == 0 || all_equal) ? Verdict::Singular : Verdict::Nonsingular;
}

std::optional<std::size_t> first_nonproportional_index(const std::vector<std::int64_t>& a,
                                                       const std::vector<std::int64_t>& b) {
    if (a.size() != b.size()) return std::min(a.size(), b.size());
    std::size_t pivot = 0;
    while (pivot < a.size() && a[pivot] == 0 && b[pivot] == 0) ++pivot;
    if (pivot == a.size()) return std::nullopt;
    if (a[pivot] == 0 || b[pivot] == 0) return pivot;
    for (std::size_t j = pivot + 1; j < a.size(); ++j) {
        if (static_cast<int128>(a[j]) * b[pivot] != static_cast<int128>(b[j]) * a[pivot]) {
            return j;
        }
    }
    return std::nullopt;
}

}  // namespace circa
