#include "doctest.h"

#include "circa/conditions.hpp"
#include "circa/errors.hpp"
#include "circa/numtheory.hpp"
#include "circa/ramanujan.hpp"
#include "oracles.hpp"

using namespace circa;

namespace {

FirstRow row(std::string_view text) { return FirstRow::parse(text); }

using Coeffs = std::vector<std::int64_t>;

}  // namespace

TEST_CASE("generate_conditions examples") {
    const auto one = generate_conditions(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].d == 1);
    CHECK(one[0].coeffs == Coeffs{1});

    const auto five = generate_conditions(5);
    REQUIRE(five.size() == 2);
    CHECK(five[0].coeffs == Coeffs{1, 1, 1, 1, 1});
    CHECK(five[1].coeffs == Coeffs{4, -1, -1, -1, -1});

    const auto four = generate_conditions(4);
    REQUIRE(four.size() == 3);
    CHECK(four[1].coeffs == Coeffs{1, -1, 1, -1});
    CHECK(four[2].coeffs == Coeffs{2, 0, -2, 0});
}

TEST_CASE("conditions are d-periodic and start at phi(d)") {
    for (std::uint64_t n = 1; n <= 64; ++n) {
        const auto conds = generate_conditions(n);
        CHECK(conds.size() == divisors(n).size());
        for (const auto& c : conds) {
            CHECK(c.coeffs[0] == static_cast<std::int64_t>(totient(c.d)));
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(c.coeffs[j] == oracle::ramanujan_float(c.d, j));
                if (j + c.d < n) CHECK(c.coeffs[j] == c.coeffs[j + c.d]);
            }
        }
    }
}

TEST_CASE("screen examples") {
    const auto a = screen(row("2,1,1"));
    CHECK(a.outcome == ScreenOutcome::CertifiedNonsingular);
    CHECK(a.vanishing.empty());
    REQUIRE(a.values.size() == 2);
    CHECK(a.values[0] == std::pair<std::uint64_t, Rational>{1, 4});
    CHECK(a.values[1] == std::pair<std::uint64_t, Rational>{3, 2});

    const auto b = screen(row("1,1,1"));
    CHECK(b.outcome == ScreenOutcome::Unknown);
    CHECK(b.vanishing == std::vector<std::uint64_t>{3});
    CHECK(b.values[0].second == 3);

    // d=1: 6, d=2: -2, d=4: 2*1 - 2*1 = 0
    const auto c = screen(row("1,2,1,2"));
    CHECK(c.vanishing == std::vector<std::uint64_t>{4});
    CHECK(c.values[1].second == -2);
    CHECK(is_singular_exact(row("1,2,1,2")).witness == 4u);
}

TEST_CASE("decide examples") {
    const auto a = decide(row("1,-1"));
    CHECK(a.verdict == Verdict::Singular);
    CHECK(a.witness_d == 1u);
    CHECK(a.path == DecisionPath::VanishingCheck);

    const auto b = decide(row("2,1,1"), true);
    CHECK(b.verdict == Verdict::Nonsingular);
    CHECK(b.path == DecisionPath::Screen);
    CHECK(b.determinant == Rational(4));

    // row sum 6; d=2 gives 1-2+2-1 = 0 and Phi_2 = x+1 divides 1+2x+2x^2+x^3
    const auto c = decide(row("1,2,2,1"), true);
    CHECK(c.screen.vanishing == std::vector<std::uint64_t>{2});
    CHECK(c.verdict == Verdict::Singular);
    CHECK(c.witness_d == 2u);
    CHECK(c.determinant == Rational(0));

    const auto d = decide(row("1,2,1,2"), true);
    CHECK(d.verdict == Verdict::Singular);
    CHECK(d.witness_d == 4u);
}

TEST_CASE("a vanishing condition alone does not imply singularity") {
    // d=4 condition 2v0 - 2v2 vanishes, but Phi_4 = x^2+1 does not divide 1+2x+x^2+3x^3
    const auto r = row("1,2,1,3");
    const auto c = decide(r, true);
    CHECK(c.screen.outcome == ScreenOutcome::Unknown);
    CHECK(c.screen.vanishing == std::vector<std::uint64_t>{4});
    CHECK(c.verdict == Verdict::Nonsingular);
    CHECK(c.path == DecisionPath::FullOracle);
    CHECK(*c.determinant != 0);
}

TEST_CASE("soundness: certified rows have nonzero determinant") {
    std::mt19937_64 rng(2024);
    int certified = 0;
    for (int trial = 0; trial < 1500; ++trial) {
        const auto r = oracle::random_row(rng, 2 + trial % 15);
        const auto s = screen(r);
        const Rational det = oracle::det_gauss(expand(r));
        if (s.outcome == ScreenOutcome::CertifiedNonsingular) {
            ++certified;
            CHECK(det != 0);
        }
        if (det == 0) CHECK_FALSE(s.vanishing.empty());
        const auto c = decide(r);
        CHECK((c.verdict == Verdict::Singular) == (det == 0));
    }
    CHECK(certified > 1000);
}

TEST_CASE("necessity: cyclotomic multiples always have a vanishing condition") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> coef(-4, 4);
    int built = 0;
    for (std::uint64_t n = 2; n <= 30; ++n) {
        for (auto d : divisors(n)) {
            const std::uint64_t room = n - totient(d);
            if (room == 0) continue;
            for (int rep = 0; rep < 2; ++rep) {
            std::vector<Rational> v;
            do {
                std::vector<BigInt> g(room);
                for (auto& x : g) x = coef(rng);
                const IntPolynomial f = cyclotomic(d) * IntPolynomial(g);
                v.assign(n, 0);
                for (std::size_t j = 0; j < n; ++j) v[j] = f[j];
            } while (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; }));
            const FirstRow r(v);
            const auto s = screen(r);
            CHECK(std::find(s.vanishing.begin(), s.vanishing.end(), d) != s.vanishing.end());
            CHECK(decide(r).verdict == Verdict::Singular);
            ++built;
            }
        }
    }
    CHECK(built >= 200);
}

TEST_CASE("classify_prime examples and exhaustive agreement") {
    CHECK(classify_prime(row("1,1,1,1,1")) == Verdict::Singular);
    CHECK(classify_prime(row("3,-1,-1,-1,0")) == Verdict::Singular);
    CHECK(classify_prime(row("2,1,1,1,1")) == Verdict::Nonsingular);
    CHECK_THROWS_AS(classify_prime(row("1,2,3,4")), InvalidInput);

    for (std::size_t n : {3, 5}) {
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= 4;
        for (std::size_t code = 0; code < total; ++code) {
            std::vector<Rational> v(n);
            std::size_t c = code;
            for (auto& x : v) {
                x = static_cast<long>(c % 4) - 1;
                c /= 4;
            }
            const FirstRow r(v);
            CHECK((classify_prime(r) == Verdict::Singular) ==
                  (oracle::det_gauss(expand(r)) == 0));
        }
    }
}

TEST_CASE("strings") {
    CHECK(to_string(Verdict::Singular) == "SINGULAR");
    CHECK(to_string(Verdict::Nonsingular) == "NONSINGULAR");
    CHECK(to_string(DecisionPath::Screen) == "screen");
    CHECK(to_string(DecisionPath::FullOracle) == "oracle");
}

TEST_CASE("proportionality helper") {
    CHECK_FALSE(first_nonproportional_index({2, 0, -2}, {-1, 0, 1}).has_value());
    CHECK_FALSE(first_nonproportional_index({0, 0}, {0, 0}).has_value());
    CHECK(first_nonproportional_index({1, 2, 3}, {2, 4, 5}) == 2u);
    CHECK(first_nonproportional_index({0, 1}, {1, 1}) == 0u);
}
