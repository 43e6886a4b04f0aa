// Hand-derived condition identities for n = q, q^k, 2^k, 2q, 2q^k, 2^k q and
// 2qr. Each identity is built term by term from its index sets, independently
// of ramanujan_sum(); templates_match_generic() then checks them against the
// generic generator.

#include <algorithm>
#include <sstream>

#include "circa/conditions.hpp"
#include "circa/errors.hpp"
#include "circa/numtheory.hpp"

namespace circa {

namespace {

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < exp; ++i) out *= base;
    return out;
}

/// Accumulates "left = right" as left minus right. Indices are taken mod n,
/// matching the cyclic indexing of a circulant first row.
class Identity {
public:
    explicit Identity(std::uint64_t n) : coeffs_(n, 0) {}

    void lhs(std::uint64_t index, std::int64_t weight = 1) { add(index, weight); }
    void rhs(std::uint64_t index, std::int64_t weight = 1) { add(index, -weight); }

    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

private:
    void add(std::uint64_t index, std::int64_t weight) { coeffs_[index % coeffs_.size()] += weight; }
    std::vector<std::int64_t> coeffs_;
};

TemplateCondition make(std::uint64_t d, std::string identity, const Identity& id) {
    return {d, std::move(identity), id.coeffs(), std::nullopt, {}};
}

TemplateCondition make_corrected(std::uint64_t d, std::string identity, const Identity& corrected,
                                 const Identity& printed, std::string correction) {
    return {d, std::move(identity), corrected.coeffs(), printed.coeffs(), std::move(correction)};
}

TemplateCondition row_sum(std::uint64_t n) {
    Identity id(n);
    for (std::uint64_t j = 0; j < n; ++j) id.lhs(j);
    return make(1, "sum_j v_j = 0", id);
}

/// sum_j v_{step j} = sum_j v_{step j + step/2} over j < n / step.
TemplateCondition even_odd_split(std::uint64_t n, std::uint64_t step) {
    Identity id(n);
    for (std::uint64_t j = 0; j < n / step; ++j) {
        id.lhs(step * j);
        id.rhs(step * j + step / 2);
    }
    return make(step, "sum_j v_{" + std::to_string(step) + "j} = sum_j v_{" +
                          std::to_string(step) + "j+" + std::to_string(step / 2) + "}",
                id);
}

/// d = q^t with q odd:
/// (q-1) sum_j v_{q^t j} = sum_j (v_{q^t j + q^{t-1}} + ... + v_{q^t j + (q-1) q^{t-1}}).
TemplateCondition odd_prime_power_condition(std::uint64_t n, std::uint64_t q, unsigned t) {
    const std::uint64_t qt = ipow(q, t);
    const std::uint64_t ql = qt / q;
    const auto w = static_cast<std::int64_t>(q - 1);
    Identity id(n);
    for (std::uint64_t j = 0; j < n / qt; ++j) {
        id.lhs(qt * j, w);
        for (std::uint64_t s = 1; s < q; ++s) id.rhs(qt * j + s * ql);
    }
    return make(qt, "(q-1) sum_j v_{q^t j} = sum_j sum_{s=1}^{q-1} v_{q^t j + s q^{t-1}}, q=" +
                        std::to_string(q) + " t=" + std::to_string(t),
                id);
}

TemplateCatalog prime_catalog(std::uint64_t q) {
    TemplateCatalog cat{q, SizeShape::Prime, q, 0, 1, {}};
    cat.conditions.push_back(row_sum(q));
    Identity id(q);
    id.lhs(0, static_cast<std::int64_t>(q - 1));
    for (std::uint64_t j = 1; j < q; ++j) id.rhs(j);
    cat.conditions.push_back(make(q, "(q-1) v_0 = v_1 + ... + v_{q-1}", id));
    return cat;
}

TemplateCatalog odd_prime_power_catalog(std::uint64_t q, unsigned k) {
    const std::uint64_t n = ipow(q, k);
    TemplateCatalog cat{n, SizeShape::OddPrimePower, q, 0, k, {}};
    cat.conditions.push_back(row_sum(n));
    for (unsigned t = 1; t <= k; ++t) cat.conditions.push_back(odd_prime_power_condition(n, q, t));
    return cat;
}

TemplateCatalog power_of_two_catalog(unsigned k) {
    const std::uint64_t n = ipow(2, k);
    TemplateCatalog cat{n, SizeShape::PowerOfTwo, 2, 0, k, {}};
    cat.conditions.push_back(row_sum(n));
    for (unsigned t = 1; t <= k; ++t) cat.conditions.push_back(even_odd_split(n, ipow(2, t)));
    return cat;
}

TemplateCatalog twice_odd_prime_catalog(std::uint64_t q) {
    const std::uint64_t n = 2 * q;
    const auto w = static_cast<std::int64_t>(q - 1);
    TemplateCatalog cat{n, SizeShape::TwiceOddPrime, q, 0, 1, {}};
    cat.conditions.push_back(row_sum(n));
    cat.conditions.push_back(even_odd_split(n, 2));

    Identity dq(n);
    dq.lhs(0, w);
    dq.lhs(q, w);
    for (std::uint64_t j = 1; j < q; ++j) {
        dq.rhs(j);
        dq.rhs(q + j);
    }
    cat.conditions.push_back(make(q, "(q-1)(v_0 + v_q) = sum_{j=1}^{q-1} (v_j + v_{q+j})", dq));

    // d = 2q: even indices other than 0 against odd indices other than q.
    auto build = [&](std::uint64_t upper) {
        Identity id(n);
        id.lhs(q, w);
        for (std::uint64_t j = 1; j < q; ++j) id.lhs(2 * j);
        id.rhs(0, w);
        for (std::uint64_t j = 1; j <= (q - 1) / 2; ++j) id.rhs(2 * j - 1);
        for (std::uint64_t j = (q + 1) / 2 + 1; j <= upper; ++j) id.rhs(2 * j - 1);
        return id;
    };
    cat.conditions.push_back(make_corrected(
        n,
        "(q-1) v_q + sum_{j=1}^{q-1} v_{2j} = (q-1) v_0 + sum_{j=1}^{(q-1)/2} v_{2j-1}"
        " + sum_{j=(q+3)/2}^{q} v_{2j-1}",
        build(q), build(q - 1),
        "second odd-index sum runs to j = q; the printed upper limit q-1 drops v_{2q-1}"));
    return cat;
}

TemplateCatalog twice_odd_prime_power_catalog(std::uint64_t q, unsigned k) {
    const std::uint64_t qk = ipow(q, k);
    const std::uint64_t n = 2 * qk;
    const auto w = static_cast<std::int64_t>(q - 1);
    TemplateCatalog cat{n, SizeShape::TwiceOddPrimePower, q, 0, k, {}};
    cat.conditions.push_back(row_sum(n));
    cat.conditions.push_back(even_odd_split(n, 2));
    for (unsigned t = 1; t <= k; ++t) cat.conditions.push_back(odd_prime_power_condition(n, q, t));
    for (unsigned t = 1; t <= k; ++t) {
        const std::uint64_t qt = ipow(q, t);
        const std::uint64_t ql = qt / q;
        Identity id(n);
        for (std::uint64_t j = 0; j < qk / qt; ++j) {
            const std::uint64_t base = 2 * qt * j;
            id.lhs(base, w);
            for (std::uint64_t s = 1; s <= q - 2; s += 2) id.lhs(base + s * ql);
            for (std::uint64_t s = 2; s <= q - 1; s += 2) id.lhs(base + qt + s * ql);
            id.rhs(base + qt, w);
            for (std::uint64_t s = 2; s <= q - 1; s += 2) id.rhs(base + s * ql);
            for (std::uint64_t s = 1; s <= q - 2; s += 2) id.rhs(base + qt + s * ql);
        }
        cat.conditions.push_back(make(
            2 * qt,
            "d = 2q^t: parity-signed split of the q^{t-1}-multiples in each block of 2q^t, t=" +
                std::to_string(t),
            id));
    }
    return cat;
}

TemplateCatalog power_of_two_times_odd_prime_catalog(unsigned k, std::uint64_t q) {
    const std::uint64_t tk = ipow(2, k);
    const std::uint64_t n = tk * q;
    const auto w = static_cast<std::int64_t>(q - 1);
    TemplateCatalog cat{n, SizeShape::PowerOfTwoTimesOddPrime, q, 0, k, {}};
    cat.conditions.push_back(row_sum(n));

    Identity dq(n);
    for (std::uint64_t j = 0; j < tk; ++j) {
        dq.lhs(q * j, w);
        for (std::uint64_t s = 1; s < q; ++s) dq.rhs(q * j + s);
    }
    cat.conditions.push_back(
        make(q, "(q-1) sum_j v_{qj} = sum_j (v_{qj+1} + ... + v_{qj+q-1})", dq));

    for (unsigned t = 1; t <= k; ++t) cat.conditions.push_back(even_odd_split(n, ipow(2, t)));

    for (unsigned t = 1; t <= k; ++t) {
        const std::uint64_t two_t = ipow(2, t);
        const std::uint64_t half = two_t / 2;
        auto build = [&](bool printed) {
            Identity id(n);
            for (std::uint64_t j = 0; j < tk / two_t; ++j) {
                const std::uint64_t base = two_t * q * j;
                id.lhs(base, w);
                if (printed) {
                    for (std::uint64_t s = 1; s <= q - 1; ++s) id.lhs(base + half * q + s * two_t);
                }
                for (std::uint64_t s = 1; s <= q - 2; s += 2) id.lhs(base + s * half);
                for (std::uint64_t s = q + 2; s <= 2 * q - 1; s += 2) id.lhs(base + s * half);
                id.rhs(base + half * q, w);
                for (std::uint64_t s = 1; s <= q - 1; ++s) id.rhs(base + s * two_t);
            }
            return id;
        };
        cat.conditions.push_back(make_corrected(
            two_t * q,
            "(q-1) sum_j v_{2^t q j} + sum_j sum_{odd s != q} v_{2^t q j + s 2^{t-1}}"
            " = (q-1) sum_j v_{2^t q j + 2^{t-1} q} + sum_j sum_{s=1}^{q-1} v_{2^t q j + s 2^t}, t=" +
                std::to_string(t),
            build(false), build(true),
            "dropped the printed term sum_{s=1}^{q-1} v_{2^t q j + 2^{t-1} q + s 2^t}; it repeats "
            "the odd multiples of 2^{t-1} already listed, doubling their coefficient"));
    }
    return cat;
}

TemplateCatalog twice_two_odd_primes_catalog(std::uint64_t q, std::uint64_t r) {
    const std::uint64_t n = 2 * q * r;
    const auto wq = static_cast<std::int64_t>(q - 1);
    const auto wr = static_cast<std::int64_t>(r - 1);
    TemplateCatalog cat{n, SizeShape::TwiceTwoOddPrimes, q, r, 1, {}};
    cat.conditions.push_back(row_sum(n));
    cat.conditions.push_back(even_odd_split(n, 2));

    auto single = [&](std::uint64_t a, std::uint64_t b) {
        // d = a: (a-1) sum_{j<2b} v_{ja} = sum_{i<2b} sum_{j=1}^{a-1} v_{ia+j}
        Identity id(n);
        for (std::uint64_t j = 0; j < 2 * b; ++j) id.lhs(j * a, static_cast<std::int64_t>(a - 1));
        for (std::uint64_t i = 0; i < 2 * b; ++i) {
            for (std::uint64_t j = 1; j < a; ++j) id.rhs(i * a + j);
        }
        return make(a, "(a-1) sum_j v_{ja} = sum_i sum_{j=1}^{a-1} v_{ia+j}, a=" + std::to_string(a),
                    id);
    };
    cat.conditions.push_back(single(q, r));
    cat.conditions.push_back(single(r, q));

    auto twice = [&](std::uint64_t a, std::uint64_t b) {
        Identity id(n);
        const auto w = static_cast<std::int64_t>(a - 1);
        for (std::uint64_t i = 1; i <= q * r - 1; ++i) {
            if (i % a != 0) id.lhs(2 * i);
        }
        for (std::uint64_t i = 0; i < b; ++i) id.lhs((2 * i + 1) * a, w);
        for (std::uint64_t i = 0; i <= q * r - 1; ++i) {
            if ((2 * i + 1) % a != 0) id.rhs(2 * i + 1);
        }
        for (std::uint64_t i = 0; i < b; ++i) id.rhs(2 * i * a, w);
        return make(2 * a,
                    "sum_{a !| i} v_{2i} + (a-1) sum_b v_{(2b+1)a} = sum_{a !| 2i+1} v_{2i+1} + "
                    "(a-1) sum_b v_{2ba}, a=" +
                        std::to_string(a),
                    id);
    };
    cat.conditions.push_back(twice(q, r));
    cat.conditions.push_back(twice(r, q));

    auto coprime_to_qr = [&](std::uint64_t i) { return i % q != 0 && i % r != 0; };
    {
        Identity id(n);
        id.lhs(0, wq * wr);
        id.lhs(q * r, wq * wr);
        for (std::uint64_t i = 1; i <= 2 * q * r - 1; ++i) {
            if (coprime_to_qr(i)) id.lhs(i);
        }
        for (std::uint64_t s = 1; s <= 2 * r - 1; ++s) {
            if (s != r) id.rhs(q * s, wq);
        }
        for (std::uint64_t s = 1; s <= 2 * q - 1; ++s) {
            if (s != q) id.rhs(r * s, wr);
        }
        cat.conditions.push_back(make(q * r,
                                      "(q-1)(r-1)(v_0 + v_{qr}) + sum_{(i,qr)=1} v_i = (q-1) "
                                      "sum_{s!=r} v_{qs} + (r-1) sum_{s!=q} v_{rs}",
                                      id));
    }
    {
        Identity id(n);
        for (std::uint64_t j = 0; j <= r - 1; ++j) {
            if (j != (r - 1) / 2) id.lhs((2 * j + 1) * q, wq);
        }
        for (std::uint64_t j = 0; j <= q - 1; ++j) {
            if (j != (q - 1) / 2) id.lhs((2 * j + 1) * r, wr);
        }
        id.lhs(0, wq * wr);
        for (std::uint64_t i = 1; i <= q * r - 1; ++i) {
            if (coprime_to_qr(i)) id.lhs(2 * i);
        }
        for (std::uint64_t j = 1; j <= r - 1; ++j) id.rhs(2 * j * q, wq);
        for (std::uint64_t j = 1; j <= q - 1; ++j) id.rhs(2 * j * r, wr);
        id.rhs(q * r, wq * wr);
        for (std::uint64_t i = 0; i <= q * r - 1; ++i) {
            if (coprime_to_qr(2 * i + 1)) id.rhs(2 * i + 1);
        }
        cat.conditions.push_back(make(n,
                                      "odd q-, r-multiples and v_0 plus even units = even q-, "
                                      "r-multiples and v_{qr} plus odd units",
                                      id));
    }
    return cat;
}

}  // namespace

std::string to_string(SizeShape s) {
    switch (s) {
        case SizeShape::Prime: return "prime";
        case SizeShape::OddPrimePower: return "q^k";
        case SizeShape::PowerOfTwo: return "2^k";
        case SizeShape::TwiceOddPrime: return "2q";
        case SizeShape::TwiceOddPrimePower: return "2q^k";
        case SizeShape::PowerOfTwoTimesOddPrime: return "2^k q";
        case SizeShape::TwiceTwoOddPrimes: return "2qr";
    }
    return "?";
}

std::optional<TemplateCatalog> template_conditions(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    const auto parts = factorize(n).prime_powers;
    if (parts.size() == 1) {
        const auto [p, k] = parts[0];
        if (k == 1) return prime_catalog(p);
        return p == 2 ? power_of_two_catalog(k) : odd_prime_power_catalog(p, k);
    }
    if (parts[0].prime != 2) return std::nullopt;
    const unsigned twos = parts[0].exponent;
    if (parts.size() == 2) {
        const auto [q, k] = parts[1];
        if (twos == 1) return k == 1 ? twice_odd_prime_catalog(q) : twice_odd_prime_power_catalog(q, k);
        if (k == 1) return power_of_two_times_odd_prime_catalog(twos, q);
        return std::nullopt;
    }
    if (parts.size() == 3 && twos == 1 && parts[1].exponent == 1 && parts[2].exponent == 1) {
        return twice_two_odd_primes_catalog(parts[1].prime, parts[2].prime);
    }
    return std::nullopt;
}

TemplateMatchReport templates_match_generic(std::uint64_t n) {
    const auto catalog = template_conditions(n);
    if (!catalog) throw InvalidInput("no condition template covers n = " + std::to_string(n));
    const auto generic = generate_conditions(n);
    TemplateMatchReport report{n, false, {}, {}};

    auto find_generic = [&](std::uint64_t d) -> const DivisorCondition* {
        for (const auto& c : generic) {
            if (c.d == d) return &c;
        }
        return nullptr;
    };
    auto describe = [](std::uint64_t d, std::size_t j, std::int64_t got, std::int64_t want) {
        std::ostringstream os;
        os << "d=" << d << ": first differing coefficient at index " << j << " (template " << got
           << ", C_d(j) " << want << ")";
        return os.str();
    };

    for (const auto& t : catalog->conditions) {
        const DivisorCondition* g = find_generic(t.d);
        if (!g) {
            report.mismatches.push_back("d=" + std::to_string(t.d) + " does not divide n");
            continue;
        }
        if (auto j = first_nonproportional_index(t.coeffs, g->coeffs)) {
            report.mismatches.push_back(describe(t.d, *j, t.coeffs[*j], g->coeffs[*j]));
        }
        if (t.printed) {
            if (auto j = first_nonproportional_index(*t.printed, g->coeffs)) {
                report.printed_discrepancies.push_back(
                    describe(t.d, *j, (*t.printed)[*j], g->coeffs[*j]) + "; " + t.correction);
            } else {
                report.printed_discrepancies.push_back(
                    "d=" + std::to_string(t.d) + ": correction '" + t.correction +
                    "' was unnecessary at this n");
            }
        }
    }
    for (const auto& g : generic) {
        const bool covered = std::any_of(catalog->conditions.begin(), catalog->conditions.end(),
                                         [&](const TemplateCondition& t) { return t.d == g.d; });
        if (!covered) report.mismatches.push_back("d=" + std::to_string(g.d) + " has no template");
    }
    report.matches = report.mismatches.empty();
    return report;
}

}  // namespace circa
