#include "circa/circulant.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "circa/errors.hpp"
#include "circa/numtheory.hpp"
#include "circa/ramanujan.hpp"

namespace circa {

namespace {

std::string_view strip(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view s = strip(text);
    const auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? "1" : s.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
        negative = num.front() == '-';
        num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) {
        throw InvalidInput("malformed rational '" + std::string(text) + "'");
    }
    BigInt n(std::string(num), 10);
    BigInt d(std::string(den), 10);
    if (d == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    if (negative) n = -n;
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& value) {
    Rational canonical = value;
    canonical.canonicalize();
    return canonical.get_str();
}

FirstRow::FirstRow(std::vector<Rational> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw InvalidInput("a first row needs at least one entry");
    for (auto& e : entries_) e.canonicalize();
}

FirstRow FirstRow::parse(std::string_view text) {
    std::vector<Rational> entries;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        entries.push_back(parse_rational(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return FirstRow(std::move(entries));
}

FirstRow FirstRow::rotated(std::size_t k) const {
    const std::size_t n = size();
    std::vector<Rational> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = entries_[(j + k) % n];
    return FirstRow(std::move(out));
}

std::string FirstRow::to_string() const {
    std::string out;
    for (std::size_t j = 0; j < entries_.size(); ++j) {
        if (j) out += ',';
        out += format_rational(entries_[j]);
    }
    return out;
}

AssociatedPolynomial associated_polynomial(const FirstRow& row) {
    BigInt scale = 1;
    for (const auto& v : row.entries()) scale = lcm(scale, BigInt(v.get_den()));
    std::vector<BigInt> coeffs;
    coeffs.reserve(row.size());
    for (const auto& v : row.entries()) coeffs.push_back(v.get_num() * (scale / v.get_den()));
    return {IntPolynomial(std::move(coeffs)), scale};
}

RationalMatrix expand(const FirstRow& row) {
    const std::size_t n = row.size();
    RationalMatrix m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = row[(j + n - i) % n];
    }
    return m;
}

BigInt det_bareiss(IntMatrix a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    BigInt previous = 1;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(a[k], a[pivot]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
            }
        }
        previous = a[k][k];
    }
    BigInt det = a[n - 1][n - 1];
    return negate ? BigInt(-det) : det;
}

Rational det_bareiss(const FirstRow& row) {
    const std::size_t n = row.size();
    const auto [poly, scale] = associated_polynomial(row);
    IntMatrix m(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = poly[(j + n - i) % n];
    }
    BigInt denominator;
    mpz_pow_ui(denominator.get_mpz_t(), scale.get_mpz_t(), n);
    Rational det(det_bareiss(std::move(m)), denominator);
    det.canonicalize();
    return det;
}

Rational det_resultant(const FirstRow& row) {
    const std::size_t n = row.size();
    const auto [poly, scale] = associated_polynomial(row);
    BigInt numerator = 1;
    for (std::uint64_t d : divisors(n)) {
        numerator *= resultant(cyclotomic(d), poly);
        if (numerator == 0) return 0;
    }
    BigInt denominator;
    mpz_pow_ui(denominator.get_mpz_t(), scale.get_mpz_t(), n);
    Rational det(numerator, denominator);
    det.canonicalize();
    return det;
}

bool cyclotomic_divides(const AssociatedPolynomial& f, std::uint64_t d) {
    return f.poly.mod_monic(cyclotomic(d)).is_zero();
}

bool eigenvalue_is_zero(const FirstRow& row, std::size_t l) {
    const std::size_t n = row.size();
    if (l >= n) throw InvalidInput("eigenvalue index out of range");
    return cyclotomic_divides(associated_polynomial(row), n / std::gcd(n, l));
}

SingularityResult is_singular_exact(const FirstRow& row) {
    const AssociatedPolynomial f = associated_polynomial(row);
    for (std::uint64_t d : divisors(row.size())) {
        if (cyclotomic_divides(f, d)) return {true, d};
    }
    return {false, std::nullopt};
}

std::string to_csv(const RationalMatrix& matrix) {
    std::ostringstream os;
    for (const auto& r : matrix) {
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (j) os << ',';
            os << format_rational(r[j]);
        }
        os << '\n';
    }
    return os.str();
}

std::vector<std::complex<double>> approximate_eigenvalues(const FirstRow& row) {
    const std::size_t n = row.size();
    std::vector<std::complex<double>> out(n);
    for (std::size_t l = 0; l < n; ++l) {
        std::complex<double> acc = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * l) % n) /
                                 static_cast<double>(n);
            acc += row[j].get_d() * std::polar(1.0, angle);
        }
        out[l] = acc;
    }
    return out;
}

}  // namespace circa
