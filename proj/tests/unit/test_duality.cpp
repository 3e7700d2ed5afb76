#include "powdiag/duality.hpp"

#include <doctest.h>

#include <random>

using namespace powdiag;

namespace {

const Prime P2(2), P3(3), P5(5);

TorusElement te(long a, long b) { return TorusElement::reduce(Rational(a, b)); }

BigInt ipow(long p, unsigned e) {
    BigInt r = 1;
    while (e--) r *= p;
    return r;
}

TorusElement random_p_char(std::mt19937_64& rng, long p, unsigned max_e) {
    std::uniform_int_distribution<unsigned> ed(0, max_e);
    const BigInt d = ipow(p, ed(rng));
    std::uniform_int_distribution<long> nd(0, 1'000'000);
    return TorusElement::reduce(Rational(BigInt(nd(rng)), d));
}

}  // namespace

TEST_CASE("product characters validate supports") {
    CHECK_NOTHROW(ProductCharacter(te(1, 4), te(2, 9), P2, P3));
    CHECK_THROWS_AS(ProductCharacter(te(1, 3), te(0, 1), P2, P3), PreconditionError);
    CHECK_THROWS_AS(ProductCharacter(te(0, 1), te(1, 2), P2, P3), PreconditionError);
    CHECK_THROWS_AS(ProductCharacter(te(1, 2), te(1, 2), P2, P2), PreconditionError);
}

TEST_CASE("eval_char examples") {
    ProductCharacter chi(te(1, 4), te(1, 3), P2, P3);
    CHECK(eval_char(chi, 1, 0) == te(1, 4));
    CHECK(eval_char(chi, 0, 1) == te(1, 3));
    CHECK(eval_char(chi, 1, 1) == te(7, 12));
    CHECK(eval_char(chi, 4, 3) == TorusElement());
    CHECK_FALSE(vanishes_on_diagonal(chi));
    CHECK(vanishes_on_diagonal(ProductCharacter(TorusElement(), TorusElement(), P2, P3)));
}

TEST_CASE("eval_char is additive") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-100000, 100000);
    for (int i = 0; i < 500; ++i) {
        ProductCharacter chi(random_p_char(rng, 2, 20), random_p_char(rng, 3, 12), P2, P3);
        const BigInt u1 = d(rng), v1 = d(rng), u2 = d(rng), v2 = d(rng);
        CHECK(eval_char(chi, u1 + u2, v1 + v2) == eval_char(chi, u1, v1) + eval_char(chi, u2, v2));
    }
}

TEST_CASE("only the zero character vanishes on the diagonal") {
    std::mt19937_64 rng(12);
    int nonzero = 0;
    for (int i = 0; i < 2000; ++i) {
        ProductCharacter chi(random_p_char(rng, 2, 10), random_p_char(rng, 3, 6), P2, P3);
        CHECK(vanishes_on_diagonal(chi) == chi.is_zero());
        nonzero += !chi.is_zero();
    }
    CHECK(nonzero > 1000);
    const auto d = diagonal_annihilator(P2, P5);
    CHECK(d.annihilator_trivial);
    CHECK_FALSE(d.steps.empty());
}

TEST_CASE("extendable diagonal characters") {
    auto r = is_extendable_diag_char(te(5, 12), P2, P3);
    REQUIRE(r.extendable);
    CHECK(r.alpha + r.beta == te(5, 12));
    CHECK(is_p_power_character(r.alpha, P2));
    CHECK(is_p_power_character(r.beta, P3));

    CHECK_FALSE(is_extendable_diag_char(te(1, 5), P2, P3).extendable);
    CHECK_FALSE(is_extendable_diag_char(te(1, 10), P2, P3).extendable);
    CHECK(is_extendable_diag_char(TorusElement(), P2, P3).extendable);
}

TEST_CASE("extendable characters form a subgroup") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> nd(-1000, 1000);
    std::uniform_int_distribution<long> dd(1, 720);
    for (int i = 0; i < 1000; ++i) {
        const auto s = te(nd(rng), dd(rng)), t = te(nd(rng), dd(rng));
        const bool es = is_extendable_diag_char(s, P2, P3).extendable;
        const bool et = is_extendable_diag_char(t, P2, P3).extendable;
        CHECK(es == is_smooth_over(s.denominator(), {2, 3}));
        if (es && et) CHECK(is_extendable_diag_char(s - t, P2, P3).extendable);
        if (es) {
            auto r = is_extendable_diag_char(s, P2, P3);
            ProductCharacter chi(r.alpha, r.beta, P2, P3);
            CHECK(eval_char(chi, 1, 1) == s);
        }
    }
}

TEST_CASE("witnesses") {
    const auto x1 = x1_witness(P2, P3);
    CHECK(x1.u == 1);
    CHECK(x1.v == 0);
    CHECK(x1.derivation.annihilator_trivial);

    CHECK(x2_witness(P2, P3) == te(1, 5));
    CHECK(x2_witness(P2, P5) == te(1, 3));
    CHECK(x2_witness(P3, P5) == te(1, 2));
    CHECK_FALSE(is_extendable_diag_char(x2_witness(P2, P3), P2, P3).extendable);
}

TEST_CASE("separating and extending subgroup characters") {
    CHECK(separating_character(P2, 3, 12) == te(1, 8));
    CHECK((separating_character(P2, 3, 12) * 12) == te(1, 2));
    CHECK_THROWS_AS(separating_character(P2, 3, 16), PreconditionError);

    const auto ext = extend_subgroup_character(P3, 2, te(1, 3));
    CHECK(ext * ipow(3, 2) == te(1, 3));
    CHECK(is_p_power_character(ext, P3));
    CHECK_THROWS_AS(extend_subgroup_character(P3, 2, te(1, 2)), PreconditionError);

    std::mt19937_64 rng(14);
    std::uniform_int_distribution<unsigned> md(0, 12);
    std::uniform_int_distribution<long> gd(-1'000'000, 1'000'000);
    for (int i = 0; i < 300; ++i) {
        const unsigned m = md(rng);
        const BigInt g = gd(rng);
        const BigInt pm = ipow(2, m);
        if (g % pm == 0) {
            CHECK_THROWS_AS(separating_character(P2, m, g), PreconditionError);
        } else {
            const auto chi = separating_character(P2, m, g);
            CHECK(chi * pm == TorusElement());
            CHECK_FALSE((chi * g).is_zero());
        }
        const auto t = random_p_char(rng, 2, 15);
        CHECK(extend_subgroup_character(P2, m, t) * pm == t);
    }
}
