// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "oracles/oracles.hpp"
#include "powdiag/serialize.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace powdiag;

namespace {

const Prime P2(2), P3(3);
constexpr SubsumMode kModes[] = {SubsumMode::Unrestricted, SubsumMode::SideSubsumFree,
                                 SubsumMode::FullySubsumFree};

struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int oracle_mode(SubsumMode m) {
    switch (m) {
        case SubsumMode::Unrestricted: return 0;
        case SubsumMode::SideSubsumFree: return 1;
        case SubsumMode::FullySubsumFree: return 2;
    }
    return -1;
}

BigInt ipow(std::uint32_t p, std::uint32_t e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, e);
    return r;
}

// Outputs of criteria 1-4, serialized, for the determinism check.
std::string criteria_1_to_4_output(unsigned threads) {
    const SearchOptions opts{threads};
    std::string out;
    for (auto mode : kModes)
        for (std::uint32_t k = 1; k <= 2; ++k)
            for (std::uint32_t l = 1; l <= 2; ++l)
                out += io::to_text(io::to_json(enumerate_joint_solutions(P2, P3, k, l, 12, mode, opts)));
    for (std::uint32_t e : {40u, 60u})
        out += io::to_text(io::to_json(enumerate_joint_solutions(P2, P3, 2, 2, e, SubsumMode::SideSubsumFree, opts)));
    out += io::to_text(io::to_json(build_delta(P2, P3, 3, 40, opts)));
    for (std::uint32_t s = 1; s <= 3; ++s)
        out += io::to_text(io::to_json(diagonal_discreteness_certificate(P2, P3, s, 40, opts)));
    return out;
}

void criterion_1() {
    for (auto mode : kModes) {
        for (std::uint32_t k = 1; k <= 2; ++k) {
            for (std::uint32_t l = 1; l <= 2; ++l) {
                const auto got = enumerate_joint_solutions(P2, P3, k, l, 12, mode);
                const auto want = oracle::joint_solutions(2, 3, k, l, 12, oracle_mode(mode));
                std::vector<oracle::Row> rows;
                for (const auto& s : got) rows.push_back({format_integer(s.value), s.p_side.to_string(), s.q_side.to_string()});
                expect(rows == want, "mismatch at k=" + std::to_string(k) + " l=" + std::to_string(l) + " mode " +
                                         std::string(to_string(mode)));
            }
        }
    }
}

void criterion_2() {
    const auto at40 = enumerate_joint_solutions(P2, P3, 2, 2, 40, SubsumMode::SideSubsumFree);
    const auto at60 = enumerate_joint_solutions(P2, P3, 2, 2, 60, SubsumMode::SideSubsumFree);
    const auto j40 = io::to_json(at40);
    expect(j40 == io::to_json(at60), "solution sets differ between max_exp 40 and 60");

    std::ifstream in(std::string(GOLDEN_DIR) + "/solve_2_3_2_2_40.json");
    expect(static_cast<bool>(in), "golden file missing");
    const auto golden = nlohmann::ordered_json::parse(in);
    expect(golden.size() == at40.size(), "golden size differs");
    for (std::size_t i = 0; i < at40.size(); ++i) {
        expect(golden[i]["value"] == j40[i]["value"] && golden[i]["p_side"] == j40[i]["p_side"] &&
                   golden[i]["q_side"] == j40[i]["q_side"],
               "golden row " + std::to_string(i) + " differs");
    }

    const std::pair<const char*, const char*> identities[] = {
        {"+2^1 +2^0", "+3^1"},       {"+2^2 -2^0", "+3^1"},       {"+2^3 +2^0", "+3^2"},
        {"+2^5 -2^2", "+3^3 +3^0"},  {"+2^5 +2^2", "+3^3 +3^2"},  {"+2^6 +2^3", "+3^4 -3^2"},
        {"+2^6 +2^4", "+3^4 -3^0"},  {"+2^8 -2^4", "+3^5 -3^1"},
    };
    for (auto [ps, qs] : identities) {
        const auto p = SignedPowerSum::parse(P2, ps), q = SignedPowerSum::parse(P3, qs);
        expect(eval(p) == eval(q), std::string("not an identity: ") + ps);
        bool found = false;
        for (const auto& s : at40) {
            if ((s.p_side == p && s.q_side == q) || (s.p_side == p.negated() && s.q_side == q.negated())) found = true;
        }
        expect(found, std::string("identity missing: ") + ps + " = " + qs);
    }
}

void criterion_3() {
    const auto t = build_delta(P2, P3, 3, 40);
    const auto f2 = f_cumulative(P2, P3, 2, 40);
    expect(f2.max_exponent() == 8, "max F(2,3,2) is not 2^8");
    expect(t.weight(0) == 1, "delta(2^0) != 1");
    for (std::uint32_t n = 1; n <= f2.max_exponent(); ++n)
        expect(t.weight(n) == Rational(1, 2), "delta(2^" + std::to_string(n) + ") != 1/2");
    for (std::uint32_t n = 1; n <= t.max_domain_exponent(); ++n)
        expect(t.weight(n) <= t.weight(n - 1), "delta increases at 2^" + std::to_string(n));
    for (std::uint32_t s = 1; s <= 3; ++s) {
        for (auto n : f_cumulative(P2, P3, s, 40).exponents)
            expect(t.weight(n) >= Rational(1, s), "implication fails at 2^" + std::to_string(n));
    }
}

void criterion_4() {
    const auto d = build_delta(P2, P3, 3, 40), e = build_delta(P3, P2, 3, 40);
    for (std::uint32_t s = 1; s <= 3; ++s) {
        const auto r = diagonal_discreteness_certificate(P2, P3, s, 40);
        expect(r.passed && r.failures.empty(), "certificate fails at s=" + std::to_string(s));
        const auto sols = enumerate_joint_solutions(P2, P3, s, s, 40, SubsumMode::SideSubsumFree);
        expect(r.solutions_checked == sols.size(), "solution count differs");
        for (const auto& sol : sols) {
            Rational wp = 0, wq = 0;
            for (const auto& term : sol.p_side.terms()) wp += d.weight(term.exponent);
            for (const auto& term : sol.q_side.terms()) wq += e.weight(term.exponent);
            const auto np = sol.p_side.size(), nq = sol.q_side.size();
            if (np >= nq) expect(wp >= 1, "p-side weight below 1 for u=" + format_integer(sol.value));
            if (nq >= np) expect(wq >= 1, "q-side weight below 1 for u=" + format_integer(sol.value));
        }
    }
}

void criterion_5() {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const auto bfs = oracle::bfs_min_terms(p, 1000);
        for (long u = -1000; u <= 1000; ++u) {
            const auto got = min_terms(BigInt(u), Prime(p), 32);
            expect(got && static_cast<int>(*got) == bfs.at(u),
                   "p=" + std::to_string(p) + " u=" + std::to_string(u));
        }
    }
}

TorusElement random_char(std::mt19937_64& rng, std::uint32_t p, std::uint32_t max_e) {
    std::uniform_int_distribution<std::uint32_t> ed(0, max_e);
    std::uniform_int_distribution<long> nd(-1'000'000'000, 1'000'000'000);
    return TorusElement::reduce(Rational(BigInt(nd(rng)), ipow(p, ed(rng))));
}

void criterion_6() {
    std::mt19937_64 rng(20240601);
    int diagonal_hits = 0;
    for (int i = 0; i < 10000; ++i) {
        const ProductCharacter chi(random_char(rng, 2, 3), random_char(rng, 3, 2), P2, P3);
        Rational sum = chi.alpha().value() + chi.beta().value();
        const bool integral = sum.get_den() == 1;
        expect(vanishes_on_diagonal(chi) == integral, "vanishes_on_diagonal disagrees");
        if (integral) {
            ++diagonal_hits;
            expect(chi.is_zero(), "non-zero character vanishes on the diagonal");
        }
    }
    expect(diagonal_hits > 0, "no sampled character vanished on the diagonal");

    std::uniform_int_distribution<long> nd(-1'000'000, 1'000'000), dd(1, 1'000'000);
    for (int i = 0; i < 10000; ++i) {
        const auto t = TorusElement::reduce(Rational(BigInt(nd(rng)), BigInt(dd(rng))));
        const auto r = is_extendable_diag_char(t, P2, P3);
        expect(r.extendable == denominator_support(t).subset_of({2, 3}), "extendability disagrees for " + t.to_string());
        if (r.extendable) expect(r.alpha + r.beta == t, "split does not sum to t");
    }
    const auto x2 = x2_witness(P2, P3);
    expect(x2 == TorusElement::parse("1/5"), "x2_witness(2,3) != 1/5");
    expect(!is_extendable_diag_char(x2, P2, P3).extendable, "x2 witness extends");
}

void criterion_7() {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> pd(0, 3);
    std::uniform_int_distribution<std::uint32_t> md(1, 10);
    std::uniform_int_distribution<long> gd(-1'000'000'000, 1'000'000'000), rd(-1'000'000, 1'000'000);
    const std::uint32_t primes[] = {2, 3, 5, 7};
    for (int i = 0; i < 1000; ++i) {
        const Prime p(primes[pd(rng)]);
        const std::uint32_t m = md(rng);
        const BigInt pm = ipow(p.value(), m);
        BigInt g;
        do g = gd(rng);
        while (g % pm == 0);
        const auto chi = separating_character(p, m, g);
        expect(!(chi * g).is_zero(), "separating character vanishes at g");
        for (int j = 0; j < 100; ++j) expect((chi * (pm * rd(rng))).is_zero(), "separating character is non-zero on p^m Z");

        const auto t = random_char(rng, p.value(), 12);
        const auto ext = extend_subgroup_character(p, m, t);
        expect(is_p_power_character(ext, p), "extension leaves Z[1/p]/Z");
        expect(ext * pm == t, "extension does not restrict to t");
    }
}

void criterion_8() {
    const auto one = criteria_1_to_4_output(1);
    for (unsigned threads : {4u, 8u}) expect(criteria_1_to_4_output(threads) == one, "output differs at " + std::to_string(threads) + " threads");
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_seconds;
        std::function<void()> run;
    };
    const Criterion criteria[] = {
        {1, "enumeration matches nested-loop oracle", 5, criterion_1},
        {2, "solution saturation and golden identities", 60, criterion_2},
        {3, "delta construction", 0, criterion_3},
        {4, "diagonal discreteness certificate, s<=3", 120, criterion_4},
        {5, "min_terms matches breadth-first oracle", 30, criterion_5},
        {6, "character algebra", 0, criterion_6},
        {7, "separating and extending subgroup characters", 0, criterion_7},
        {8, "determinism across 1, 4, 8 threads", 0, criterion_8},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = Clock::now();
        std::string detail;
        bool ok = true;
        try {
            c.run();
        } catch (const Failure& f) {
            ok = false;
            detail = f.what;
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        const double secs = seconds_since(t0);
        if (ok && c.limit_seconds > 0 && secs > c.limit_seconds) {
            ok = false;
            detail = "over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
        }
        std::printf("%s criterion %d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name, secs,
                    detail.empty() ? "" : ": ", detail.c_str());
        std::fflush(stdout);
        failed += !ok;
    }
    return failed == 0 ? 0 : 1;
}
