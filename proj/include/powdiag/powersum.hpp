#pragma once

// Signed power-sum representations: u = sum_i e_i p^{n_i}, e_i = +-1.

#include "powdiag/exact_arith.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace powdiag {

enum class Sign : int { Minus = -1, Plus = 1 };

/// One signed monomial sign * p^exponent. Ordered by (exponent, sign).
struct Term {
    std::uint32_t exponent = 0;
    Sign sign = Sign::Plus;

    friend bool operator==(const Term&, const Term&) = default;
    friend auto operator<=>(const Term&, const Term&) = default;
};

/// A multiset of signed powers of one prime. Terms are kept sorted in
/// descending order; repeats are allowed.
class SignedPowerSum {
public:
    explicit SignedPowerSum(Prime base, std::vector<Term> terms = {});

    /// Parses "+2^5 -2^2" (empty string is the empty sum).
    static SignedPowerSum parse(Prime base, std::string_view text);

    Prime base() const { return base_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    SignedPowerSum negated() const;
    SignedPowerSum concat(const SignedPowerSum& other) const;
    std::uint32_t max_exponent() const { return terms_.empty() ? 0 : terms_.front().exponent; }

    /// "+2^5 -2^2": signed monomials, exponents decreasing.
    std::string to_string() const;

    friend bool operator==(const SignedPowerSum&, const SignedPowerSum&) = default;

private:
    Prime base_;
    std::vector<Term> terms_;
};

/// Canonical order: term count, then lexicographic on the sorted terms.
std::strong_ordering canonical_compare(const SignedPowerSum& a, const SignedPowerSum& b);

struct CanonicalLess {
    bool operator()(const SignedPowerSum& a, const SignedPowerSum& b) const { return canonical_compare(a, b) < 0; }
};

BigInt eval(const SignedPowerSum& rep);

/// True iff some non-empty sub-multiset of `values` sums to zero. With
/// `proper`, the full multiset is excluded.
bool has_zero_subsum(std::span<const BigInt> values, bool proper);

/// True iff some non-empty sub-multiset of rep, the full one included,
/// has value 0.
bool has_vanishing_side_subsum(const SignedPowerSum& rep);

/// A non-empty proper sub-multiset of `rep` with value 0, if one exists.
std::optional<SignedPowerSum> vanishing_subsum(const SignedPowerSum& rep);

/// Balanced signed-digit representation. Non-adjacent form for p = 2;
/// digits in [-(p-1)/2, (p-1)/2] otherwise, a digit d contributing |d|
/// equal terms. Never has a vanishing subsum.
SignedPowerSum balanced_rep(const BigInt& u, Prime p);

/// Least k <= cap with u a sum of k elements of {+-p^n}; nullopt when the
/// minimum exceeds cap. Exponents are bounded by ceil_log(u) + cap and,
/// when given, by max_exp.
std::optional<std::size_t> min_terms(const BigInt& u, Prime p, std::size_t cap,
                                     std::optional<std::uint32_t> max_exp = std::nullopt);

/// As min_terms, returning a representation that attains the minimum.
std::optional<SignedPowerSum> min_terms_rep(const BigInt& u, Prime p, std::size_t cap,
                                            std::optional<std::uint32_t> max_exp = std::nullopt);

/// All representations of u with at most max_terms terms and exponents at
/// most max_exp, in canonical order.
std::vector<SignedPowerSum> enumerate_reps(const BigInt& u, Prime p, std::size_t max_terms, std::uint32_t max_exp);

}  // namespace powdiag
