#include "circa/numtheory.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "circa/errors.hpp"

namespace circa {

namespace {
__extension__ typedef unsigned __int128 uint128;
}  // namespace

std::uint64_t Factorization::value() const {
    std::uint64_t n = 1;
    for (const auto& [prime, exponent] : prime_powers) {
        for (unsigned i = 0; i < exponent; ++i) n *= prime;
    }
    return n;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw InvalidInput("factorize: n must be positive");
    Factorization f;
    auto take = [&](std::uint64_t p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) f.prime_powers.push_back({p, e});
    };
    take(2);
    take(3);
    take(5);
    // 2,3,5 wheel: candidates 7, 11, 13, 17, 19, 23, 29, 31, 37, ...
    static constexpr std::array<std::uint64_t, 8> gaps{4, 2, 4, 2, 4, 6, 2, 6};
    std::uint64_t p = 7;
    for (std::size_t i = 0; p <= n / p; p += gaps[i], i = (i + 1) % gaps.size()) {
        take(p);
    }
    if (n > 1) f.prime_powers.push_back({n, 1});
    return f;
}

std::uint64_t totient(std::uint64_t n) {
    std::uint64_t phi = n;
    for (const auto& pp : factorize(n).prime_powers) phi = phi / pp.prime * (pp.prime - 1);
    return phi;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out{1};
    for (const auto& [prime, exponent] : factorize(n).prime_powers) {
        const std::size_t base = out.size();
        std::uint64_t power = 1;
        for (unsigned e = 1; e <= exponent; ++e) {
            power *= prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> unit_group(std::uint64_t n) {
    if (n < 2) throw InvalidInput("unit_group: n must be at least 2");
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (std::gcd(d, n) == 1) out.push_back(d);
    }
    return out;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw InvalidInput("inverse_mod: zero has no inverse");
    return pow_mod(a, p - 2, p);
}

namespace {

constexpr std::uint64_t kTrialLimit = std::uint64_t{1} << 20;

bool miller_rabin_round(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < kTrialLimit) {
        if (n % 2 == 0) return n == 2;
        for (std::uint64_t d = 3; d * d <= n; d += 2) {
            if (n % d == 0) return false;
        }
        return true;
    }
    if (n % 2 == 0) return false;
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    // These bases are deterministic for every 64-bit n.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (!miller_rabin_round(n, a, d, s)) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p < 3 || !is_prime(p)) {
        throw InvalidInput("PrimeField: " + std::to_string(p) + " is not an odd prime");
    }
}

bool is_primitive_element(std::uint64_t h, const PrimeField& field) {
    const std::uint64_t p = field.p();
    if (h < 1 || h > p - 1) throw InvalidInput("is_primitive_element: h must lie in [1, p-1]");
    for (const auto& pp : factorize(p - 1).prime_powers) {
        if (pow_mod(h, (p - 1) / pp.prime, p) == 1) return false;
    }
    return true;
}

std::vector<std::uint64_t> primitive_elements(const PrimeField& field) {
    const std::uint64_t p = field.p();
    const std::uint64_t g = smallest_primitive_element(field);
    std::vector<std::uint64_t> out;
    for (std::uint64_t t : unit_group(p - 1)) out.push_back(pow_mod(g, t, p));
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t smallest_primitive_element(const PrimeField& field) {
    for (std::uint64_t h = 2; h < field.p(); ++h) {
        if (is_primitive_element(h, field)) return h;
    }
    throw InternalInconsistency("no primitive element found modulo " + std::to_string(field.p()));
}

std::vector<std::uint64_t> discrete_log_table(std::uint64_t h, const PrimeField& field) {
    const std::uint64_t p = field.p();
    if (!is_primitive_element(h, field)) {
        throw InvalidInput("discrete_log_table: " + std::to_string(h) + " is not primitive mod " +
                           std::to_string(p));
    }
    std::vector<std::uint64_t> dlog(p, 0);
    std::uint64_t x = 1;
    for (std::uint64_t k = 0; k < p - 1; ++k) {
        dlog[x] = k;
        x = mul_mod(x, h, p);
    }
    return dlog;
}

bool two_is_primitive_for_quarter_prime(std::uint64_t q) {
    if (!is_prime(q)) throw InvalidInput(std::to_string(q) + " is not prime");
    const std::uint64_t p = 4 * q + 1;
    if (!is_prime(p)) {
        throw InvalidInput("4q+1 = " + std::to_string(p) + " is composite");
    }
    return is_primitive_element(2, PrimeField(p));
}

}  // namespace circa
