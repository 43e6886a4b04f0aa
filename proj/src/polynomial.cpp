#include "circa/polynomial.hpp"

#include <sstream>

#include "circa/errors.hpp"

namespace circa {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, const BigInt& coefficient) {
    std::vector<BigInt> c(degree + 1, BigInt(0));
    c[degree] = coefficient;
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::x_pow_minus_one(std::size_t n) {
    std::vector<BigInt> c(n + 1, BigInt(0));
    c[0] = -1;
    c[n] += 1;
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(c));
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod_monic(
    const IntPolynomial& divisor) const {
    if (!divisor.is_monic()) throw InvalidInput("divmod_monic: divisor must be monic");
    const std::size_t dsize = divisor.coeffs_.size();
    if (coeffs_.size() < dsize) return {IntPolynomial{}, *this};
    std::vector<BigInt> rem = coeffs_;
    std::vector<BigInt> quot(coeffs_.size() - dsize + 1, BigInt(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        const BigInt c = rem[k + dsize - 1];
        quot[k] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i < dsize; ++i) rem[k + i] -= c * divisor.coeffs_[i];
    }
    rem.resize(dsize - 1);
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial IntPolynomial::mod_monic(const IntPolynomial& divisor) const {
    return divmod_monic(divisor).second;
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || k == 0) os << mag.get_str();
        if (k >= 1) os << "x";
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

long deg(const QPoly& p) { return static_cast<long>(p.size()) - 1; }

QPoly remainder(QPoly a, const QPoly& b) {
    const long db = deg(b);
    while (deg(a) >= db) {
        const Rational factor = a.back() / b.back();
        const std::size_t shift = static_cast<std::size_t>(deg(a) - db);
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

Rational power(const Rational& base, long exp) {
    Rational out = 1;
    for (long i = 0; i < exp; ++i) out *= base;
    return out;
}

}  // namespace

BigInt resultant(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    QPoly A(a.coefficients().begin(), a.coefficients().end());
    QPoly B(b.coefficients().begin(), b.coefficients().end());
    Rational acc = 1;
    while (true) {
        const long da = deg(A);
        const long db = deg(B);
        if (db == 0) {
            acc *= power(B[0], da);
            break;
        }
        if (da == 0) {
            acc *= power(A[0], db);
            break;
        }
        QPoly R = remainder(A, B);
        if (R.empty()) return 0;
        // Res(A,B) = (-1)^(da*db) lc(B)^(da - deg R) Res(B, R)
        if ((da * db) % 2 != 0) acc = -acc;
        acc *= power(B.back(), da - deg(R));
        A = std::move(B);
        B = std::move(R);
    }
    acc.canonicalize();
    if (acc.get_den() != 1) throw InternalInconsistency("resultant of integer polynomials is not integral");
    return acc.get_num();
}

}  // namespace circa
