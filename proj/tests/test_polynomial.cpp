#include "doctest.h"

#include "circa/polynomial.hpp"
#include "circa/ramanujan.hpp"

using namespace circa;

TEST_CASE("construction trims trailing zeros") {
    const IntPolynomial p{1, 2, 0, 0};
    CHECK(p.degree() == 1);
    CHECK(IntPolynomial{0, 0}.is_zero());
    CHECK(IntPolynomial{}.degree() == -1);
    CHECK(IntPolynomial::x_pow_minus_one(3) == IntPolynomial{-1, 0, 0, 1});
    CHECK(IntPolynomial::monomial(2, 5) == IntPolynomial{0, 0, 5});
}

TEST_CASE("arithmetic and evaluation") {
    const IntPolynomial a{1, 1};   // 1 + x
    const IntPolynomial b{-1, 1};  // x - 1
    CHECK(a * b == IntPolynomial{-1, 0, 1});
    CHECK(a + b == IntPolynomial{0, 2});
    CHECK((a - a).is_zero());
    CHECK((a * b).evaluate(3) == 8);
    CHECK(IntPolynomial{1, -1, 1}.to_string() == "x^2 - x + 1");
}

TEST_CASE("monic division is exact") {
    const IntPolynomial f{5, -3, 0, 2, 7};
    const IntPolynomial g{1, 1, 1};
    const auto [q, r] = f.divmod_monic(g);
    CHECK(r.degree() < g.degree());
    CHECK(q * g + r == f);
    CHECK(IntPolynomial::x_pow_minus_one(6).mod_monic(IntPolynomial{1, -1, 1}).is_zero());
}

namespace {

// Sylvester-determinant resultant over Q, used only as a check.
BigInt sylvester(const IntPolynomial& a, const IntPolynomial& b) {
    const long m = a.degree(), n = b.degree();
    const long size = m + n;
    std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
    for (long i = 0; i < n; ++i) {
        for (long k = 0; k <= m; ++k) s[i][i + k] = a[m - k];
    }
    for (long i = 0; i < m; ++i) {
        for (long k = 0; k <= n; ++k) s[n + i][i + k] = b[n - k];
    }
    Rational det = 1;
    for (long c = 0; c < size; ++c) {
        long piv = c;
        while (piv < size && s[piv][c] == 0) ++piv;
        if (piv == size) return 0;
        if (piv != c) {
            std::swap(s[piv], s[c]);
            det = -det;
        }
        det *= s[c][c];
        for (long r = c + 1; r < size; ++r) {
            const Rational f = s[r][c] / s[c][c];
            for (long k = c; k < size; ++k) s[r][k] -= f * s[c][k];
        }
    }
    return det.get_num();
}

}  // namespace

TEST_CASE("resultant agrees with the Sylvester determinant") {
    const std::vector<IntPolynomial> polys = {
        {1, 2, 3}, {-1, 0, 1}, {2, 0, 0, 1}, {1, 1, 1, 1, 1}, {3, -4}, {0, 1, 1}, {2, 5, 0, -3, 1}};
    for (const auto& a : polys) {
        for (const auto& b : polys) {
            CAPTURE(a.to_string());
            CAPTURE(b.to_string());
            CHECK(resultant(a, b) == sylvester(a, b));
        }
    }
    CHECK(resultant(IntPolynomial{-1, 0, 1}, IntPolynomial{1, 1}) == 0);
    CHECK(resultant(IntPolynomial{}, IntPolynomial{1, 1}) == 0);
    CHECK(resultant(IntPolynomial{3}, IntPolynomial{1, 1, 1}) == 9);
}

TEST_CASE("resultant with cyclotomic polynomials is the norm") {
    // Res(Phi_3, 2 + x + x^2) = product over primitive cube roots = 1 * 1
    CHECK(resultant(cyclotomic(3), IntPolynomial{2, 1, 1}) == 1);
    CHECK(resultant(cyclotomic(3), IntPolynomial{1, 1, 1}) == 0);
    CHECK(resultant(cyclotomic(1), IntPolynomial{2, 1, 1}) == 4);
}
