#include "powdiag/weights.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace powdiag {

WeightTable::WeightTable(Prime p, Prime q, std::uint32_t s_max, std::uint32_t max_exp, std::vector<std::uint32_t> fmax)
    : p_(p), q_(q), s_max_(s_max), max_exp_(max_exp), fmax_(std::move(fmax)) {
    if (fmax_.size() != s_max_ || s_max_ == 0) throw PreconditionError("weight table needs one F-maximum per s");
    for (std::uint32_t n = 0; n <= fmax_.back(); ++n) {
        std::uint32_t s = 1;
        while (fmax_[s - 1] < n) ++s;
        entries_.push_back({Rational(1, s), s});
    }
}

const WeightTable::Entry& WeightTable::entry(std::uint32_t n) const {
    if (!in_domain(n)) {
        throw DomainExceeded("domain exceeded: " + std::to_string(p_.value()) + "^" + std::to_string(n) +
                             " is beyond the table domain (max exponent " + std::to_string(max_domain_exponent()) + ")");
    }
    return entries_[n];
}

WeightTable build_weight_table(const std::vector<JointSolution>& solutions, Prime base, Prime partner,
                               std::uint32_t s_max, std::uint32_t max_exp, bool q_side) {
    const auto fsets = f_cumulative_from(solutions, base, s_max, q_side);
    std::vector<std::uint32_t> fmax;
    for (const auto& f : fsets) {
        auto m = f.max_exponent();
        // 1 = 1 always lies in F(p,q,1).
        if (!m) throw Error("empty F-set for s = " + std::to_string(fmax.size() + 1));
        fmax.push_back(*m);
    }
    WeightTable table(base, partner, s_max, max_exp, std::move(fmax));
    for (std::uint32_t s = 1; s <= s_max; ++s) {
        for (auto n : fsets[s - 1].exponents) {
            if (table.weight(n) < Rational(1, s)) {
                throw Error("weight implication violated at " + std::to_string(base.value()) + "^" + std::to_string(n));
            }
        }
    }
    return table;
}

WeightTable build_delta(Prime p, Prime q, std::uint32_t s_max, std::uint32_t max_exp, const SearchOptions& opts) {
    if (s_max < 1) throw PreconditionError("s_max must be >= 1");
    auto sols = enumerate_joint_solutions(p, q, s_max, s_max, max_exp, SubsumMode::SideSubsumFree, opts);
    return build_weight_table(sols, p, q, s_max, max_exp, false);
}

namespace {

struct Candidate {
    Rational weight;
    std::vector<Term> terms;  // descending
};

bool better(const Candidate& a, const Candidate& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    if (a.terms.size() != b.terms.size()) return a.terms.size() < b.terms.size();
    return std::lexicographical_compare(a.terms.begin(), a.terms.end(), b.terms.begin(), b.terms.end());
}

}  // namespace

NormBound restricted_norm(const BigInt& u, const WeightTable& table, std::uint32_t max_terms, const SearchOptions& opts) {
    if (max_terms < 1) throw PreconditionError("max_terms must be >= 1");
    const Prime p = table.p();
    if (u == 0) return {Rational(0), SignedPowerSum(p)};

    const std::uint32_t top = table.max_domain_exponent();
    std::vector<BigInt> pw(top + 1);
    pw[0] = 1;
    for (std::uint32_t e = 1; e <= top; ++e) pw[e] = pw[e - 1] * p.value();
    const std::uint32_t monomials = 2 * (top + 1);
    auto term_of = [](std::uint32_t idx) { return Term{idx / 2, idx % 2 ? Sign::Plus : Sign::Minus}; };

    // Branch and bound over non-increasing monomial sequences; each worker
    // owns a set of leading monomials and the per-lead optima are reduced in
    // a fixed order.
    auto search_lead = [&](std::uint32_t lead) -> std::optional<Candidate> {
        std::optional<Candidate> best;
        std::vector<Term> cur;
        std::function<void(const BigInt&, std::uint32_t, const Rational&)> dfs = [&](const BigInt& rem,
                                                                                     std::uint32_t limit,
                                                                                     const Rational& w) {
            if (best && w > best->weight) return;
            if (rem == 0) {
                Candidate c{w, cur};
                if (!best || better(c, *best)) best = std::move(c);
                return;
            }
            const std::size_t left = max_terms - cur.size();
            if (left == 0) return;
            for (std::uint32_t idx = limit; idx-- > 0;) {
                const Term t = term_of(idx);
                if (abs(rem) > pw[t.exponent] * static_cast<unsigned long>(left)) break;
                cur.push_back(t);
                dfs(t.sign == Sign::Plus ? BigInt(rem - pw[t.exponent]) : BigInt(rem + pw[t.exponent]), idx + 1,
                    w + table.weight(t.exponent));
                cur.pop_back();
            }
        };
        const Term t = term_of(lead);
        if (abs(u) > pw[t.exponent] * static_cast<unsigned long>(max_terms)) return std::nullopt;
        cur.push_back(t);
        dfs(t.sign == Sign::Plus ? BigInt(u - pw[t.exponent]) : BigInt(u + pw[t.exponent]), lead + 1,
            table.weight(t.exponent));
        return best;
    };

    std::vector<std::optional<Candidate>> per_lead(monomials);
    const unsigned workers = std::min<unsigned>(opts.worker_count(), monomials);
    std::atomic<std::uint32_t> next{0};
    auto work = [&] {
        for (std::uint32_t lead; (lead = next.fetch_add(1)) < monomials;) per_lead[lead] = search_lead(lead);
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }

    std::optional<Candidate> best;
    for (auto& c : per_lead) {
        if (c && (!best || better(*c, *best))) best = std::move(c);
    }
    if (!best) {
        throw NotRepresentable("u = " + u.get_str() + " not representable within bounds (max_terms " +
                               std::to_string(max_terms) + ", max exponent " + std::to_string(top) + ")");
    }
    return {best->weight, SignedPowerSum(p, std::move(best->terms))};
}

WeightCheck joint_weight_check(const JointSolution& sol, const WeightTable& dtab, const WeightTable& etab) {
    if (sol.p_side.base() != dtab.p() || sol.q_side.base() != etab.p()) {
        throw PreconditionError("solution bases do not match the weight tables");
    }
    WeightCheck out;
    const std::size_t k = sol.p_side.size(), l = sol.q_side.size();
    out.s = static_cast<std::uint32_t>(std::max(k, l));
    out.threshold = Rational(1, out.s);
    bool ok = true;
    out.p_total = 0;
    for (const auto& t : sol.p_side.terms()) {
        const Rational& w = dtab.weight(t.exponent);
        out.p_margins.push_back(w - out.threshold);
        out.p_total += w;
        ok = ok && w >= out.threshold;
    }
    out.q_total = 0;
    for (const auto& t : sol.q_side.terms()) {
        const Rational& w = etab.weight(t.exponent);
        out.q_margins.push_back(w - out.threshold);
        out.q_total += w;
        ok = ok && w >= out.threshold;
    }
    // The side with more terms (both when tied) carries total weight >= 1.
    if (k >= l) ok = ok && out.p_total >= 1;
    if (l >= k) ok = ok && out.q_total >= 1;
    out.passed = ok;
    return out;
}

DiscretenessReport diagonal_discreteness_certificate(Prime p, Prime q, std::uint32_t s, std::uint32_t max_exp,
                                                     const SearchOptions& opts) {
    if (s < 1) throw PreconditionError("s must be >= 1");
    auto sols = enumerate_joint_solutions(p, q, s, s, max_exp, SubsumMode::SideSubsumFree, opts);
    const WeightTable dtab = build_weight_table(sols, p, q, s, max_exp, false);
    const WeightTable etab = build_weight_table(sols, q, p, s, max_exp, true);

    DiscretenessReport report{false, p, q, s, max_exp, sols.size(), {}, {}};
    for (const auto& sol : sols) {
        if (!joint_weight_check(sol, dtab, etab).passed) report.failures.push_back(sol);
        if (report.values.empty() || report.values.back() != sol.value) report.values.push_back(sol.value);
    }
    std::sort(report.values.begin(), report.values.end());
    report.values.erase(std::unique(report.values.begin(), report.values.end()), report.values.end());
    report.passed = report.failures.empty();
    return report;
}

}  // namespace powdiag
