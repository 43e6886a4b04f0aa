#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace circa {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense polynomial over Z, lowest degree first. The stored coefficient
/// vector never has trailing zeros, so the zero polynomial is empty.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients);
    IntPolynomial(std::initializer_list<long> coefficients);

    static IntPolynomial monomial(std::size_t degree, const BigInt& coefficient = 1);
    /// x^n - 1
    static IntPolynomial x_pow_minus_one(std::size_t n);

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    /// Coefficient of x^k, zero beyond the degree.
    BigInt operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
    const BigInt& leading() const { return coeffs_.back(); }

    BigInt evaluate(const BigInt& x) const;

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Quotient and remainder by a monic divisor; exact over Z.
    std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& divisor) const;
    IntPolynomial mod_monic(const IntPolynomial& divisor) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Res(a, b) = lc(a)^deg(b) * prod_{a(alpha)=0} b(alpha), computed exactly with
/// a Euclidean remainder sequence over Q. Zero when either input is zero.
BigInt resultant(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace circa
