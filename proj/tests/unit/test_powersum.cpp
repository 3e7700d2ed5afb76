#include "powdiag/powersum.hpp"

#include "../oracles/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace powdiag;

namespace {

SignedPowerSum R(std::uint32_t p, const char* s) { return SignedPowerSum::parse(Prime(p), s); }

}  // namespace

TEST_CASE("eval") {
    CHECK(eval(R(2, "+2^3 +2^0")) == 9);
    CHECK(eval(SignedPowerSum(Prime(3))) == 0);
    CHECK(eval(R(2, "+2^2 -2^1 -2^1")) == 0);
    CHECK(eval(R(3, "+3^60")).get_str() == "42391158275216203514294433201");
}

TEST_CASE("text form keeps exponents decreasing") {
    const SignedPowerSum r(Prime(2), {{2, Sign::Minus}, {5, Sign::Plus}});
    CHECK(r.to_string() == "+2^5 -2^2");
    CHECK(R(2, "-2^2 +2^5") == r);
    CHECK(R(2, "").empty());
    CHECK_THROWS_AS(R(2, "+3^1"), PreconditionError);
    CHECK_THROWS_AS(R(2, "2^1"), PreconditionError);
    CHECK_THROWS_AS(R(2, "+2^x"), PreconditionError);
}

TEST_CASE("vanishing_subsum") {
    CHECK_FALSE(vanishing_subsum(R(2, "+2^1 +2^0")));
    auto w = vanishing_subsum(R(2, "+2^2 -2^1 -2^1 +2^0"));
    REQUIRE(w);
    CHECK(*w == R(2, "+2^2 -2^1 -2^1"));
    // The full multiset is excluded.
    CHECK_FALSE(vanishing_subsum(R(3, "+3^1 -3^1")));
    CHECK_FALSE(vanishing_subsum(R(2, "+2^2 -2^1 -2^1")));
    // Proper part of a vanishing sum.
    auto w2 = vanishing_subsum(R(2, "+2^3 -2^3 +2^1 -2^1"));
    REQUIRE(w2);
    CHECK(eval(*w2) == 0);
    CHECK(w2->size() == 2);
    // Carries across gaps: 9 - 3 - 3 - 3 = 0 inside a longer sum.
    auto w3 = vanishing_subsum(R(3, "+3^2 -3^1 -3^1 -3^1 +3^0"));
    REQUIRE(w3);
    CHECK(*w3 == R(3, "+3^2 -3^1 -3^1 -3^1"));
    CHECK_FALSE(vanishing_subsum(R(3, "+3^2 -3^1 -3^1 +3^0")));
}

TEST_CASE("vanishing_subsum agrees with subset enumeration") {
    std::mt19937_64 rng(3);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        std::uniform_int_distribution<std::uint32_t> exp(0, 4), count(1, 7);
        std::bernoulli_distribution plus(0.5);
        for (int trial = 0; trial < 600; ++trial) {
            std::vector<Term> terms;
            for (auto n = count(rng); n > 0; --n) terms.push_back({exp(rng), plus(rng) ? Sign::Plus : Sign::Minus});
            const SignedPowerSum rep(Prime(p), terms);
            std::vector<BigInt> vals;
            for (const auto& t : rep.terms()) vals.push_back(t.sign == Sign::Plus ? pow(Prime(p), t.exponent) : BigInt(-pow(Prime(p), t.exponent)));
            const auto w = vanishing_subsum(rep);
            CHECK(w.has_value() == has_zero_subsum(vals, true));
            CHECK(has_vanishing_side_subsum(rep) == has_zero_subsum(vals, false));
            if (w) {
                CHECK(eval(*w) == 0);
                CHECK(!w->empty());
                CHECK(w->size() < rep.size());
            }
        }
    }
}

TEST_CASE("balanced_rep examples") {
    CHECK(balanced_rep(BigInt(2), Prime(3)) == R(3, "+3^1 -3^0"));
    CHECK(balanced_rep(BigInt(7), Prime(2)) == R(2, "+2^3 -2^0"));
    CHECK(balanced_rep(BigInt(0), Prime(5)).empty());
    CHECK(balanced_rep(BigInt(-2), Prime(3)) == R(3, "-3^1 +3^0"));
    // A balanced base-5 digit 2 contributes two equal terms.
    CHECK(balanced_rep(BigInt(2), Prime(5)) == R(5, "+5^0 +5^0"));
}

TEST_CASE("balanced_rep evaluates back and has no vanishing subsum") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (long u = -1000000; u <= 1000000; u += (u > -3000 && u < 3000) ? 1 : 997) {
            const auto rep = balanced_rep(BigInt(u), Prime(p));
            REQUIRE(eval(rep) == u);
            if (u % 97 == 0) CHECK_FALSE(has_vanishing_side_subsum(rep));
            if (p <= 3) {
                for (std::size_t i = 1; i < rep.size(); ++i) CHECK(rep.terms()[i].exponent < rep.terms()[i - 1].exponent);
            }
            if (p == 2) {
                for (std::size_t i = 1; i < rep.size(); ++i) CHECK(rep.terms()[i - 1].exponent - rep.terms()[i].exponent >= 2);
            }
        }
    }
}

TEST_CASE("min_terms examples") {
    CHECK(min_terms(BigInt(0), Prime(2), 5) == 0u);
    CHECK(min_terms(BigInt(3), Prime(2), 5) == 2u);
    CHECK(min_terms(BigInt(11), Prime(2), 5) == 3u);
    CHECK_FALSE(min_terms(BigInt(11), Prime(2), 2));
    CHECK_THROWS_AS(min_terms(BigInt(1), Prime(2), 0), PreconditionError);

    // The examples agree with the breadth-first oracle.
    const auto bfs = oracle::bfs_min_terms(2, 20);
    CHECK(bfs.at(3) == 2);
    CHECK(bfs.at(11) == 3);

    auto rep = min_terms_rep(BigInt(11), Prime(2), 5);
    REQUIRE(rep);
    CHECK(eval(*rep) == 11);
    CHECK(rep->size() == 3);
}

TEST_CASE("min_terms equals the breadth-first oracle on a small range") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const auto bfs = oracle::bfs_min_terms(p, 200);
        for (long u = -200; u <= 200; ++u) {
            auto got = min_terms(BigInt(u), Prime(p), 16);
            REQUIRE(got);
            CHECK(static_cast<int>(*got) == bfs.at(u));
        }
    }
}

TEST_CASE("min_terms properties") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (long u = -300; u <= 300; ++u) {
            const auto bal = balanced_rep(BigInt(u), Prime(p));
            const auto m = min_terms(BigInt(u), Prime(p), 20);
            REQUIRE(m);
            CHECK(*m <= bal.size());
            CHECK(min_terms(BigInt(-u), Prime(p), 20) == m);
            const auto rep = min_terms_rep(BigInt(u), Prime(p), 20);
            REQUIRE(rep);
            CHECK(eval(*rep) == u);
            CHECK(rep->size() == *m);
        }
    }
    // Large inputs stay cheap.
    const BigInt big = pow(Prime(3), 200) - pow(Prime(3), 5) + 1;
    CHECK(min_terms(big, Prime(3), 4) == 3u);
}

TEST_CASE("min_terms honours an exponent bound") {
    // 7 = 8 - 1 needs 2^3; with exponents <= 2 the best is 4 + 2 + 1.
    CHECK(min_terms(BigInt(7), Prime(2), 5) == 2u);
    CHECK(min_terms(BigInt(7), Prime(2), 5, 2) == 3u);
    CHECK_FALSE(min_terms(BigInt(64), Prime(2), 2, 3));
}

TEST_CASE("enumerate_reps examples") {
    auto one = enumerate_reps(BigInt(1), Prime(2), 1, 10);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == R(2, "+2^0"));

    auto three = enumerate_reps(BigInt(3), Prime(2), 2, 10);
    REQUIRE(three.size() == 2);
    CHECK(three[0] == R(2, "+2^1 +2^0"));
    CHECK(three[1] == R(2, "+2^2 -2^0"));

    CHECK(enumerate_reps(BigInt(5), Prime(3), 1, 10).empty());
}

TEST_CASE("enumerate_reps matches nested-loop enumeration") {
    for (std::uint32_t p : {2u, 3u}) {
        for (long u = -40; u <= 40; ++u) {
            auto reps = enumerate_reps(BigInt(u), Prime(p), 3, 6);
            std::set<std::string> got;
            for (const auto& r : reps) {
                CHECK(eval(r) == u);
                got.insert(r.to_string());
            }
            CHECK(got.size() == reps.size());
            CHECK(got == oracle::brute_reps(u, p, 3, 6));
            CHECK(std::is_sorted(reps.begin(), reps.end(), CanonicalLess{}));
        }
    }
}
