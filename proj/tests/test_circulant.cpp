#include "doctest.h"

#include <complex>

#include "circa/circulant.hpp"
#include "circa/errors.hpp"
#include "circa/numtheory.hpp"
#include "circa/ramanujan.hpp"
#include "oracles.hpp"

using namespace circa;

namespace {

FirstRow row(std::string_view text) { return FirstRow::parse(text); }

}  // namespace

TEST_CASE("parse_rational grammar") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational(" -7 ") == -7);
    CHECK(parse_rational("+2") == 2);
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(parse_rational("-1/2") == Rational(-1, 2));
    for (const char* bad : {"", "x", "1/0", "1.5", "1/", "/3", "--1", "1/-2", "2 3"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_rational(bad), InvalidInput);
    }
    CHECK(format_rational(Rational(6, 4)) == "3/2");
    CHECK(format_rational(Rational(-4, 2)) == "-2");
}

TEST_CASE("FirstRow parsing and rotation") {
    const auto r = row("1, 2/4, -3");
    CHECK(r.size() == 3);
    CHECK(r[1] == Rational(1, 2));
    CHECK(r.to_string() == "1,1/2,-3");
    CHECK(r.rotated(1) == row("1/2,-3,1"));
    CHECK(r.rotated(3) == r);
    CHECK_THROWS_AS(row(""), InvalidInput);
    CHECK_THROWS_AS(row("1,,2"), InvalidInput);
    CHECK_THROWS_AS(row("1,x,3"), InvalidInput);
}

TEST_CASE("expand") {
    const auto m = expand(row("1,2,3"));
    const RationalMatrix expected = {{1, 2, 3}, {3, 1, 2}, {2, 3, 1}};
    CHECK(m == expected);
    CHECK(expand(row("7")) == RationalMatrix{{7}});
    const auto g = expand(row("1,4,16,9"));
    CHECK(g[1] == std::vector<Rational>{9, 1, 4, 16});
    CHECK(g[3] == std::vector<Rational>{4, 16, 9, 1});
}

TEST_CASE("determinant examples") {
    CHECK(det_bareiss(row("1,1,1")) == 0);
    CHECK(det_bareiss(row("2,1,1")) == 4);
    CHECK(det_bareiss(row("5/3")) == Rational(5, 3));
    CHECK(det_resultant(row("1,1,1")) == 0);
    CHECK(det_resultant(row("2,1,1")) == 4);
    CHECK(det_resultant(row("0,0")) == 0);
    CHECK(det_bareiss(row("0,0")) == 0);
    CHECK(det_bareiss(row("0,1")) == -1);
    CHECK(det_resultant(row("0,1")) == -1);
    CHECK(det_bareiss(IntMatrix{{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("random rows: Bareiss, resultant and Gaussian elimination agree") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 1 + trial % 12;
        const auto r = oracle::random_row(rng, n);
        CAPTURE(r.to_string());
        const Rational gauss = oracle::det_gauss(expand(r));
        CHECK(det_bareiss(r) == gauss);
        CHECK(det_resultant(r) == gauss);
        CHECK(is_singular_exact(r).singular == (gauss == 0));
        if (n <= 6) CHECK(oracle::det_cofactor(expand(r)) == gauss);
    }
}

TEST_CASE("|det| is invariant under rotation") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const auto r = oracle::random_row(rng, 2 + trial % 9);
        const Rational base = abs(det_bareiss(r));
        for (std::size_t k = 1; k < r.size(); ++k) CHECK(abs(det_bareiss(r.rotated(k))) == base);
    }
}

TEST_CASE("eigenvalue_is_zero") {
    CHECK(eigenvalue_is_zero(row("1,1,1"), 1));
    CHECK(eigenvalue_is_zero(row("1,1,1"), 2));
    CHECK_FALSE(eigenvalue_is_zero(row("1,1,1"), 0));
    for (std::size_t l = 0; l < 3; ++l) CHECK_FALSE(eigenvalue_is_zero(row("2,1,1"), l));
}

TEST_CASE("exact eigenvalue test matches floating point on clear cases") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto r = oracle::random_row(rng, 2 + trial % 10);
        const auto ev = approximate_eigenvalues(r);
        for (std::size_t l = 0; l < r.size(); ++l) {
            if (eigenvalue_is_zero(r, l)) CHECK(std::abs(ev[l]) < 1e-9);
            else CHECK(std::abs(ev[l]) > 1e-9);
        }
    }
}

TEST_CASE("is_singular_exact witnesses") {
    CHECK(is_singular_exact(row("1,-1")).singular);
    CHECK(is_singular_exact(row("1,-1")).witness == 1u);
    CHECK(is_singular_exact(row("1,1,1,1")).witness == 2u);
    CHECK_FALSE(is_singular_exact(row("2,1,1")).singular);
    CHECK_FALSE(is_singular_exact(row("2,1,1")).witness.has_value());
}

TEST_CASE("cyclotomic multiples are singular at the chosen divisor") {
    std::mt19937_64 rng(5);
    for (std::uint64_t n = 2; n <= 18; ++n) {
        for (auto d : divisors(n)) {
            if (totient(d) >= n) continue;
            // f = Phi_d * g with deg f < n
            std::uniform_int_distribution<int> coef(-3, 3);
            IntPolynomial g;
            do {
                std::vector<BigInt> c(n - totient(d));
                for (auto& x : c) x = coef(rng);
                g = IntPolynomial(c);
            } while (g.is_zero());
            const IntPolynomial f = cyclotomic(d) * g;
            std::vector<Rational> v(n);
            for (std::size_t j = 0; j < n; ++j) v[j] = f[j];
            const FirstRow r(v);
            CHECK(is_singular_exact(r).singular);
            CHECK(*is_singular_exact(r).witness <= d);
            CHECK(det_bareiss(r) == 0);
            CHECK(cyclotomic_divides(associated_polynomial(r), d));
        }
    }
}

TEST_CASE("associated polynomial clears denominators") {
    const auto f = associated_polynomial(row("1/2,2/3,-1"));
    CHECK(f.scale == 6);
    CHECK(f.poly == IntPolynomial{3, 4, -6});
}

TEST_CASE("csv export") {
    CHECK(to_csv(expand(row("1,1/2"))) == "1,1/2\n1/2,1\n");
}
