#include "powdiag/powersum.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

namespace powdiag {

namespace {

std::vector<BigInt> power_table(Prime p, std::uint32_t max_exp) {
    std::vector<BigInt> pw(max_exp + 1);
    pw[0] = 1;
    for (std::uint32_t e = 1; e <= max_exp; ++e) pw[e] = pw[e - 1] * p.value();
    return pw;
}

void push_digit(std::vector<Term>& terms, std::uint32_t exponent, long digit) {
    const Sign s = digit < 0 ? Sign::Minus : Sign::Plus;
    for (long i = 0; i < (digit < 0 ? -digit : digit); ++i) terms.push_back({exponent, s});
}

// Any non-empty sub-multiset of `terms` (base p) summing to zero, found by
// a carry DP over the distinct exponents in ascending order.
std::optional<std::vector<Term>> zero_submultiset(const std::vector<Term>& terms, Prime p) {
    struct Group {
        std::uint32_t exponent;
        long plus = 0;
        long minus = 0;
    };
    std::vector<Group> groups;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        if (groups.empty() || groups.back().exponent != it->exponent) groups.push_back({it->exponent});
        (it->sign == Sign::Plus ? groups.back().plus : groups.back().minus) += 1;
    }
    for (const auto& g : groups) {
        if (g.plus > 0 && g.minus > 0) {
            return std::vector<Term>{{g.exponent, Sign::Plus}, {g.exponent, Sign::Minus}};
        }
    }
    if (groups.empty()) return std::nullopt;

    const long total = static_cast<long>(terms.size());
    // Gap multipliers saturate once they exceed any reachable carry.
    std::vector<long> gap_mult(groups.size(), 0);
    for (std::size_t i = 0; i + 1 < groups.size(); ++i) {
        long m = 1;
        for (std::uint32_t g = groups[i].exponent; g < groups[i + 1].exponent && m <= 2 * total + 1; ++g) m *= p.value();
        gap_mult[i] = m;
    }

    std::map<std::tuple<std::size_t, long, bool>, bool> memo;
    std::vector<long> chosen(groups.size(), 0);
    std::function<bool(std::size_t, long, bool)> solve = [&](std::size_t i, long carry, bool nonempty) -> bool {
        auto key = std::make_tuple(i, carry, nonempty);
        if (auto it = memo.find(key); it != memo.end() && !it->second) return false;
        const Group& g = groups[i];
        const long sign = g.plus > 0 ? 1 : -1;
        const long count = g.plus > 0 ? g.plus : g.minus;
        for (long d = 0; d <= count; ++d) {
            const long v = carry + sign * d;
            const bool ne = nonempty || d > 0;
            bool ok;
            if (i + 1 == groups.size()) {
                ok = v == 0 && ne;
            } else {
                const long m = gap_mult[i];
                ok = v % m == 0 && solve(i + 1, v / m, ne);
            }
            if (ok) {
                chosen[i] = d;
                return true;
            }
        }
        memo[key] = false;
        return false;
    };
    if (!solve(0, 0, false)) return std::nullopt;

    std::vector<Term> out;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        const Sign s = groups[i].plus > 0 ? Sign::Plus : Sign::Minus;
        for (long c = 0; c < chosen[i]; ++c) out.push_back({groups[i].exponent, s});
    }
    return out;
}

}  // namespace

SignedPowerSum::SignedPowerSum(Prime base, std::vector<Term> terms) : base_(base), terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end(), std::greater<>());
}

SignedPowerSum SignedPowerSum::parse(Prime base, std::string_view text) {
    std::vector<Term> terms;
    std::istringstream in{std::string(text)};
    std::string tok;
    const std::string prefix = std::to_string(base.value()) + "^";
    while (in >> tok) {
        if (tok.size() < prefix.size() + 2 || (tok[0] != '+' && tok[0] != '-') ||
            tok.compare(1, prefix.size(), prefix) != 0) {
            throw PreconditionError("malformed monomial '" + tok + "' for base " + std::to_string(base.value()));
        }
        const std::string exp = tok.substr(1 + prefix.size());
        if (!std::all_of(exp.begin(), exp.end(), [](char c) { return c >= '0' && c <= '9'; }) || exp.size() > 9) {
            throw PreconditionError("malformed exponent in '" + tok + "'");
        }
        terms.push_back({static_cast<std::uint32_t>(std::stoul(exp)), tok[0] == '+' ? Sign::Plus : Sign::Minus});
    }
    return SignedPowerSum(base, std::move(terms));
}

SignedPowerSum SignedPowerSum::negated() const {
    std::vector<Term> t = terms_;
    for (auto& x : t) x.sign = x.sign == Sign::Plus ? Sign::Minus : Sign::Plus;
    return SignedPowerSum(base_, std::move(t));
}

SignedPowerSum SignedPowerSum::concat(const SignedPowerSum& other) const {
    if (other.base_ != base_) throw PreconditionError("cannot concatenate power sums over different bases");
    std::vector<Term> t = terms_;
    t.insert(t.end(), other.terms_.begin(), other.terms_.end());
    return SignedPowerSum(base_, std::move(t));
}

std::string SignedPowerSum::to_string() const {
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty()) out += ' ';
        out += t.sign == Sign::Plus ? '+' : '-';
        out += std::to_string(base_.value());
        out += '^';
        out += std::to_string(t.exponent);
    }
    return out;
}

std::strong_ordering canonical_compare(const SignedPowerSum& a, const SignedPowerSum& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.terms().begin(), a.terms().end(), b.terms().begin(),
                                                  b.terms().end());
}

BigInt eval(const SignedPowerSum& rep) {
    BigInt sum = 0;
    for (const auto& t : rep.terms()) {
        BigInt v = pow(rep.base(), t.exponent);
        if (t.sign == Sign::Plus) sum += v;
        else sum -= v;
    }
    return sum;
}

bool has_zero_subsum(std::span<const BigInt> values, bool proper) {
    const std::size_t n = values.size();
    if (n > 24) throw ResourceError("subsum check limited to 24 terms");
    const std::uint32_t full = (1u << n) - 1;
    std::vector<BigInt> sums(std::size_t{1} << n);
    sums[0] = 0;
    for (std::uint32_t mask = 1; mask <= full && n > 0; ++mask) {
        const unsigned low = static_cast<unsigned>(__builtin_ctz(mask));
        sums[mask] = sums[mask & (mask - 1)] + values[low];
        if (sums[mask] == 0 && !(proper && mask == full)) return true;
    }
    return false;
}

std::optional<SignedPowerSum> vanishing_subsum(const SignedPowerSum& rep) {
    if (rep.size() < 2) return std::nullopt;
    std::vector<Term> pool = rep.terms();
    // If the whole sum vanishes, any proper vanishing part avoids one fixed
    // term or has a vanishing complement that does.
    if (eval(rep) == 0) pool.pop_back();
    auto found = zero_submultiset(pool, rep.base());
    if (!found) return std::nullopt;
    return SignedPowerSum(rep.base(), std::move(*found));
}

bool has_vanishing_side_subsum(const SignedPowerSum& rep) { return zero_submultiset(rep.terms(), rep.base()).has_value(); }

SignedPowerSum balanced_rep(const BigInt& u, Prime p) {
    std::vector<Term> terms;
    BigInt v = u;
    std::uint32_t e = 0;
    const long pl = p.value();
    while (v != 0) {
        BigInt r;
        mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p.value());
        long d = r.get_si();
        if (pl == 2) {
            if (d == 1) {
                BigInt r4;
                mpz_fdiv_r_ui(r4.get_mpz_t(), v.get_mpz_t(), 4);
                d = r4 == 1 ? 1 : -1;
            }
        } else if (d > (pl - 1) / 2) {
            d -= pl;
        }
        push_digit(terms, e, d);
        v -= d;
        mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p.value());
        ++e;
    }
    return SignedPowerSum(p, std::move(terms));
}

namespace {

// Digit DP for minimal signed power sums: at each level the remaining value
// v must be written as sum_j d_j p^j over the levels left, and the digit at
// the current level is congruent to v mod p with |digit| <= cap.
class MinTermsSearch {
public:
    MinTermsSearch(Prime p, std::size_t cap, std::uint32_t max_level)
        : p_(p), cap_(static_cast<long>(cap)), max_level_(max_level), reach_(power_table(p, max_level)) {
        for (auto& r : reach_) r *= cap_;
    }

    long best(const BigInt& v, std::uint32_t level) {
        if (v == 0) return 0;
        if (level > max_level_) return cap_ + 1;
        if (abs(v) > reach_[max_level_ - level]) return cap_ + 1;
        auto key = std::make_pair(level, v);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second.cost;

        BigInt r;
        mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_.value());
        const long base = r.get_si();
        const long pl = p_.value();
        std::vector<long> digits;
        for (long d = base - ((base + cap_) / pl) * pl; d <= cap_; d += pl) {
            if (d >= -cap_) digits.push_back(d);
        }
        std::stable_sort(digits.begin(), digits.end(), [](long a, long b) {
            const long aa = a < 0 ? -a : a, bb = b < 0 ? -b : b;
            return aa != bb ? aa < bb : a > b;
        });

        Entry e{cap_ + 1, 0};
        for (long d : digits) {
            const long ad = d < 0 ? -d : d;
            if (ad >= e.cost) break;
            BigInt next = v - d;
            mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), p_.value());
            const long c = ad + best(next, level + 1);
            if (c < e.cost) e = {c, d};
        }
        if (e.cost > cap_) e.cost = cap_ + 1;
        memo_.emplace(std::move(key), e);
        return e.cost;
    }

    SignedPowerSum witness(const BigInt& u) {
        std::vector<Term> terms;
        BigInt v = u;
        for (std::uint32_t level = 0; v != 0; ++level) {
            const long d = memo_.at(std::make_pair(level, v)).digit;
            push_digit(terms, level, d);
            v -= d;
            mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p_.value());
        }
        return SignedPowerSum(p_, std::move(terms));
    }

private:
    struct Entry {
        long cost;
        long digit;
    };
    Prime p_;
    long cap_;
    std::uint32_t max_level_;
    std::vector<BigInt> reach_;
    std::map<std::pair<std::uint32_t, BigInt>, Entry> memo_;
};

std::uint32_t min_terms_level_bound(const BigInt& u, Prime p, std::size_t cap, std::optional<std::uint32_t> max_exp) {
    std::uint32_t bound = ceil_log(u, p) + static_cast<std::uint32_t>(std::min<std::size_t>(cap, 4096));
    if (max_exp) bound = std::min(bound, *max_exp);
    return bound;
}

}  // namespace

std::optional<std::size_t> min_terms(const BigInt& u, Prime p, std::size_t cap, std::optional<std::uint32_t> max_exp) {
    if (cap < 1) throw PreconditionError("min_terms: cap must be >= 1");
    if (u == 0) return 0;
    MinTermsSearch search(p, cap, min_terms_level_bound(u, p, cap, max_exp));
    const long c = search.best(u, 0);
    if (c > static_cast<long>(cap)) return std::nullopt;
    return static_cast<std::size_t>(c);
}

std::optional<SignedPowerSum> min_terms_rep(const BigInt& u, Prime p, std::size_t cap,
                                            std::optional<std::uint32_t> max_exp) {
    if (cap < 1) throw PreconditionError("min_terms: cap must be >= 1");
    if (u == 0) return SignedPowerSum(p);
    MinTermsSearch search(p, cap, min_terms_level_bound(u, p, cap, max_exp));
    if (search.best(u, 0) > static_cast<long>(cap)) return std::nullopt;
    return search.witness(u);
}

std::vector<SignedPowerSum> enumerate_reps(const BigInt& u, Prime p, std::size_t max_terms, std::uint32_t max_exp) {
    const auto pw = power_table(p, max_exp);
    const std::uint32_t monomials = 2 * (max_exp + 1);
    auto term_of = [](std::uint32_t idx) { return Term{idx / 2, idx % 2 ? Sign::Plus : Sign::Minus}; };

    std::vector<SignedPowerSum> out;
    std::vector<Term> current;
    std::function<void(const BigInt&, std::uint32_t)> dfs = [&](const BigInt& rem, std::uint32_t limit) {
        if (rem == 0) out.emplace_back(p, current);
        const std::size_t left = max_terms - current.size();
        if (left == 0) return;
        for (std::uint32_t idx = limit; idx-- > 0;) {
            const Term t = term_of(idx);
            // Every remaining term is at most p^t.exponent in magnitude.
            if (abs(rem) > pw[t.exponent] * static_cast<unsigned long>(left)) break;
            current.push_back(t);
            dfs(t.sign == Sign::Plus ? BigInt(rem - pw[t.exponent]) : BigInt(rem + pw[t.exponent]), idx + 1);
            current.pop_back();
        }
    };
    dfs(u, monomials);
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

}  // namespace powdiag
