#include "powdiag/sunit_enum.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace powdiag {

namespace {

struct SidePowers {
    std::vector<BigInt> pw;
    explicit SidePowers(Prime p, std::uint32_t max_exp) : pw(max_exp + 1) {
        pw[0] = 1;
        for (std::uint32_t e = 1; e <= max_exp; ++e) pw[e] = pw[e - 1] * p.value();
    }
};

// Signed monomials are indexed 2e + (sign == Plus), which matches Term order.
Term term_of(std::uint32_t idx) { return Term{idx / 2, idx % 2 ? Sign::Plus : Sign::Minus}; }

// Visits every multiset of at most `max_terms` monomials whose largest index
// is `lead`, as a non-increasing index sequence with its running value.
void for_each_with_lead(std::uint32_t lead, std::uint32_t max_terms, const SidePowers& powers,
                        const std::function<void(const std::vector<std::uint32_t>&, const BigInt&)>& visit) {
    std::vector<std::uint32_t> idx{lead};
    std::function<void(const BigInt&)> rec = [&](const BigInt& sum) {
        visit(idx, sum);
        if (idx.size() == max_terms) return;
        for (std::uint32_t next = 0; next <= idx.back(); ++next) {
            const Term t = term_of(next);
            idx.push_back(next);
            rec(t.sign == Sign::Plus ? BigInt(sum + powers.pw[t.exponent]) : BigInt(sum - powers.pw[t.exponent]));
            idx.pop_back();
        }
    };
    const Term t = term_of(lead);
    rec(t.sign == Sign::Plus ? powers.pw[t.exponent] : BigInt(-powers.pw[t.exponent]));
}

SignedPowerSum to_rep(Prime base, const std::vector<std::uint32_t>& idx) {
    std::vector<Term> terms;
    terms.reserve(idx.size());
    for (auto i : idx) terms.push_back(term_of(i));
    return SignedPowerSum(base, std::move(terms));
}

bool side_ok(const SignedPowerSum& rep, SubsumMode mode) {
    return mode == SubsumMode::Unrestricted || !has_vanishing_side_subsum(rep);
}

bool combined_ok(const SignedPowerSum& pside, const SignedPowerSum& qside) {
    std::vector<BigInt> vals;
    vals.reserve(pside.size() + qside.size());
    for (const auto& t : pside.terms()) {
        BigInt v = pow(pside.base(), t.exponent);
        vals.push_back(t.sign == Sign::Plus ? v : BigInt(-v));
    }
    for (const auto& t : qside.terms()) {
        BigInt v = pow(qside.base(), t.exponent);
        vals.push_back(t.sign == Sign::Plus ? BigInt(-v) : v);
    }
    return !has_zero_subsum(vals, true);
}

void check_pair(Prime p, Prime q, std::uint32_t k, std::uint32_t l) {
    if (p == q) throw PreconditionError("primes must be distinct");
    if (k < 1 || l < 1) throw PreconditionError("term bounds k and l must be >= 1");
}

void check_cap(std::uint32_t terms, std::uint32_t max_exp, const SearchOptions& opts) {
    const std::uint64_t need = side_multiset_count(terms, max_exp);
    if (need > opts.memory_cap) {
        throw ResourceError("partial-sum index would hold " + std::to_string(need) + " entries, cap is " +
                            std::to_string(opts.memory_cap));
    }
}

}  // namespace

std::string_view to_string(SubsumMode mode) {
    switch (mode) {
        case SubsumMode::Unrestricted: return "unrestricted";
        case SubsumMode::SideSubsumFree: return "side-subsum-free";
        case SubsumMode::FullySubsumFree: return "fully-subsum-free";
    }
    return "?";
}

SubsumMode parse_subsum_mode(std::string_view text) {
    std::string s(text);
    std::replace(s.begin(), s.end(), '_', '-');
    if (s == "unrestricted") return SubsumMode::Unrestricted;
    if (s == "side-subsum-free") return SubsumMode::SideSubsumFree;
    if (s == "fully-subsum-free") return SubsumMode::FullySubsumFree;
    throw PreconditionError("unknown subsum mode: " + std::string(text));
}

bool canonical_less(const JointSolution& a, const JointSolution& b) {
    if (int c = mpz_cmpabs(a.value.get_mpz_t(), b.value.get_mpz_t()); c != 0) return c < 0;
    if (a.value != b.value) return a.value < b.value;
    if (auto c = canonical_compare(a.p_side, b.p_side); c != 0) return c < 0;
    return canonical_compare(a.q_side, b.q_side) < 0;
}

bool satisfies_mode(const JointSolution& sol, SubsumMode mode) {
    if (sol.value == 0 || eval(sol.p_side) != sol.value || eval(sol.q_side) != sol.value) return false;
    switch (mode) {
        case SubsumMode::Unrestricted: return true;
        case SubsumMode::SideSubsumFree:
            return !has_vanishing_side_subsum(sol.p_side) && !has_vanishing_side_subsum(sol.q_side);
        case SubsumMode::FullySubsumFree: return combined_ok(sol.p_side, sol.q_side);
    }
    return false;
}

unsigned SearchOptions::worker_count() const {
    if (threads > 0) return threads;
    return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t side_multiset_count(std::uint32_t max_terms, std::uint32_t max_exp) {
    const unsigned __int128 m = 2 * (static_cast<unsigned __int128>(max_exp) + 1);
    unsigned __int128 total = 0, c = 1;  // c = C(m + j - 1, j)
    for (std::uint32_t j = 1; j <= max_terms; ++j) {
        c = c * (m + j - 1) / j;
        total += c;
        if (c > UINT64_MAX || total > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(total);
}

std::vector<JointSolution> enumerate_joint_solutions(Prime p, Prime q, std::uint32_t k, std::uint32_t l,
                                                     std::uint32_t max_exp, SubsumMode mode,
                                                     const SearchOptions& opts) {
    check_pair(p, q, k, l);
    check_cap(l, max_exp, opts);
    const std::uint32_t monomials = 2 * (max_exp + 1);

    // q-side index: value -> admissible q-side representations.
    const SidePowers qpow(q, max_exp);
    std::vector<SignedPowerSum> qreps;
    std::unordered_map<BigInt, std::vector<std::size_t>, BigIntHash> qindex;
    for (std::uint32_t lead = 0; lead < monomials; ++lead) {
        for_each_with_lead(lead, l, qpow, [&](const std::vector<std::uint32_t>& idx, const BigInt& v) {
            if (v == 0) return;
            SignedPowerSum rep = to_rep(q, idx);
            if (!side_ok(rep, mode)) return;
            qindex[v].push_back(qreps.size());
            qreps.push_back(std::move(rep));
        });
    }

    // Stream p-side sums, partitioned across workers by leading monomial.
    const SidePowers ppow(p, max_exp);
    const unsigned workers = std::min<unsigned>(opts.worker_count(), monomials);
    std::vector<std::vector<JointSolution>> found(workers);
    std::atomic<std::uint32_t> next_lead{0};
    auto work = [&](unsigned w) {
        for (std::uint32_t lead; (lead = next_lead.fetch_add(1)) < monomials;) {
            for_each_with_lead(lead, k, ppow, [&](const std::vector<std::uint32_t>& idx, const BigInt& v) {
                if (v == 0) return;
                auto hit = qindex.find(v);
                if (hit == qindex.end()) return;
                SignedPowerSum prep = to_rep(p, idx);
                if (!side_ok(prep, mode)) return;
                for (std::size_t qi : hit->second) {
                    if (mode == SubsumMode::FullySubsumFree && !combined_ok(prep, qreps[qi])) continue;
                    found[w].push_back({prep, qreps[qi], v});
                }
            });
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }

    std::vector<JointSolution> out;
    for (auto& part : found) std::move(part.begin(), part.end(), std::back_inserter(out));
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::optional<std::uint32_t> PowerSet::max_exponent() const {
    if (exponents.empty()) return std::nullopt;
    return *exponents.rbegin();
}

std::vector<std::string> PowerSet::to_strings() const {
    std::vector<std::string> out;
    for (auto e : exponents) out.push_back(std::to_string(base.value()) + "^" + std::to_string(e));
    return out;
}

PowerSet f_set(Prime p, Prime q, std::uint32_t k, std::uint32_t l, std::uint32_t max_exp, const SearchOptions& opts) {
    PowerSet out{p, {}};
    for (const auto& sol : enumerate_joint_solutions(p, q, k, l, max_exp, SubsumMode::SideSubsumFree, opts)) {
        for (const auto& t : sol.p_side.terms()) out.exponents.insert(t.exponent);
    }
    return out;
}

std::vector<PowerSet> f_cumulative_from(const std::vector<JointSolution>& solutions, Prime base, std::uint32_t s_max,
                                        bool q_side) {
    std::vector<PowerSet> out(s_max, PowerSet{base, {}});
    for (const auto& sol : solutions) {
        const std::size_t need = std::max(sol.p_side.size(), sol.q_side.size());
        const SignedPowerSum& side = q_side ? sol.q_side : sol.p_side;
        if (side.base() != base) throw PreconditionError("f_cumulative_from: base does not match solution side");
        for (std::size_t s = std::max<std::size_t>(need, 1); s <= s_max; ++s) {
            for (const auto& t : side.terms()) out[s - 1].exponents.insert(t.exponent);
        }
    }
    return out;
}

PowerSet f_cumulative(Prime p, Prime q, std::uint32_t s, std::uint32_t max_exp, const SearchOptions& opts) {
    if (s < 1) throw PreconditionError("s must be >= 1");
    auto sols = enumerate_joint_solutions(p, q, s, s, max_exp, SubsumMode::SideSubsumFree, opts);
    return f_cumulative_from(sols, p, s, false).back();
}

std::set<BigInt> admissible_sums(Prime p, Prime q, std::uint32_t k, std::uint32_t l, std::uint32_t max_exp,
                                 const SearchOptions& opts) {
    check_pair(p, q, k, l);
    check_cap(l, max_exp, opts);
    const std::uint32_t monomials = 2 * (max_exp + 1);

    const SidePowers qpow(q, max_exp);
    std::unordered_set<BigInt, BigIntHash> qvalues{BigInt(0)};
    for (std::uint32_t lead = 0; lead < monomials; ++lead) {
        for_each_with_lead(lead, l, qpow, [&](const std::vector<std::uint32_t>&, const BigInt& v) { qvalues.insert(v); });
    }
    const SidePowers ppow(p, max_exp);
    std::set<BigInt> out{BigInt(0)};
    for (std::uint32_t lead = 0; lead < monomials; ++lead) {
        for_each_with_lead(lead, k, ppow, [&](const std::vector<std::uint32_t>&, const BigInt& v) {
            if (qvalues.count(v)) out.insert(v);
        });
    }
    return out;
}

SaturationReport saturation_report(Prime p, Prime q, std::uint32_t k, std::uint32_t l, SubsumMode mode,
                                   const std::vector<std::uint32_t>& exp_bounds, const SearchOptions& opts) {
    if (!std::is_sorted(exp_bounds.begin(), exp_bounds.end())) {
        throw PreconditionError("exponent bounds must be ascending");
    }
    SaturationReport report;
    std::vector<JointSolution> previous;
    for (auto bound : exp_bounds) {
        auto current = enumerate_joint_solutions(p, q, k, l, bound, mode, opts);
        SaturationRow row{bound, current.size(), {}};
        std::set_difference(current.begin(), current.end(), previous.begin(), previous.end(),
                            std::back_inserter(row.added), canonical_less);
        report.rows.push_back(std::move(row));
        previous = std::move(current);
    }
    if (report.rows.size() >= 2) {
        const auto& last = report.rows.back();
        const auto& before = report.rows[report.rows.size() - 2];
        report.saturated = last.added.empty() && last.count == before.count;
    }
    return report;
}

}  // namespace powdiag
