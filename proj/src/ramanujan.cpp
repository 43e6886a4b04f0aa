#include "circa/ramanujan.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "circa/errors.hpp"
#include "circa/numtheory.hpp"

namespace circa {

namespace {

std::mutex cache_mutex;
std::map<std::uint64_t, IntPolynomial> cache;

}  // namespace

const IntPolynomial& cyclotomic(std::uint64_t d) {
    if (d == 0) throw InvalidInput("cyclotomic: d must be positive");
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = cache.find(d); it != cache.end()) return it->second;
    }
    IntPolynomial quotient = IntPolynomial::x_pow_minus_one(d);
    for (std::uint64_t e : divisors(d)) {
        if (e == d) break;
        auto [q, r] = quotient.divmod_monic(cyclotomic(e));
        if (!r.is_zero()) {
            throw InternalInconsistency("x^" + std::to_string(d) + " - 1 not divisible by Phi_" +
                                        std::to_string(e));
        }
        quotient = std::move(q);
    }
    std::lock_guard lock(cache_mutex);
    // std::map never relocates nodes, so references handed out earlier survive.
    return cache.try_emplace(d, std::move(quotient)).first->second;
}

std::int64_t ramanujan_sum(std::uint64_t d, std::uint64_t n) {
    if (d == 0) throw InvalidInput("ramanujan_sum: d must be positive");
    std::int64_t value = 1;
    for (const auto& [p, k] : factorize(d).prime_powers) {
        std::uint64_t lower = 1;  // p^(k-1)
        for (unsigned i = 1; i < k; ++i) lower *= p;
        const std::uint64_t full = lower * p;
        if (n % full == 0) {
            value *= static_cast<std::int64_t>(full - lower);
        } else if (n % lower == 0) {
            value *= -static_cast<std::int64_t>(lower);
        } else {
            return 0;
        }
    }
    return value;
}

std::int64_t ramanujan_sum_oracle(std::uint64_t d, std::uint64_t n) {
    if (d == 0) throw InvalidInput("ramanujan_sum_oracle: d must be positive");
    std::vector<BigInt> sum(d, BigInt(0));
    for (std::uint64_t a = 1; a <= d; ++a) {
        if (std::gcd(a, d) == 1) sum[static_cast<std::size_t>(a % d * (n % d) % d)] += 1;
    }
    const IntPolynomial residue = IntPolynomial(std::move(sum)).mod_monic(cyclotomic(d));
    if (!residue.is_constant()) {
        throw InternalInconsistency("C_" + std::to_string(d) + "(" + std::to_string(n) +
                                    ") residue is not constant: " + residue.to_string());
    }
    return residue[0].get_si();
}

}  // namespace circa
