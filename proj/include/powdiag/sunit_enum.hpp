#pragma once

// Bounded enumeration of x_1 + ... + x_k = y_1 + ... + y_l with the x_i
// signed powers of p and the y_j signed powers of q.

#include "powdiag/powersum.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace powdiag {

/// Which vanishing subsums disqualify a solution.
enum class SubsumMode {
    /// Any solution with non-zero value.
    Unrestricted,
    /// No non-empty subsum of either side vanishes.
    SideSubsumFree,
    /// No non-empty proper subsum of x_1+...+x_k-y_1-...-y_l vanishes.
    FullySubsumFree,
};

std::string_view to_string(SubsumMode mode);
SubsumMode parse_subsum_mode(std::string_view text);

struct JointSolution {
    SignedPowerSum p_side;
    SignedPowerSum q_side;
    BigInt value;

    JointSolution negated() const { return {p_side.negated(), q_side.negated(), -value}; }
    friend bool operator==(const JointSolution&, const JointSolution&) = default;
};

/// |value|, then value, then p-side, then q-side (canonical power-sum order).
bool canonical_less(const JointSolution& a, const JointSolution& b);

bool satisfies_mode(const JointSolution& sol, SubsumMode mode);

struct SearchOptions {
    unsigned threads = 0;  // 0: hardware concurrency
    std::uint64_t memory_cap = 100'000'000;  // max stored partial sums

    unsigned worker_count() const;
};

/// Number of multisets of 1..max_terms monomials drawn from the 2*(max_exp+1)
/// signed powers; saturates at UINT64_MAX.
std::uint64_t side_multiset_count(std::uint32_t max_terms, std::uint32_t max_exp);

/// All solutions with 1..k p-terms, 1..l q-terms, exponents <= max_exp,
/// value != 0 and the mode's subsum predicate, in canonical order.
std::vector<JointSolution> enumerate_joint_solutions(Prime p, Prime q, std::uint32_t k, std::uint32_t l,
                                                     std::uint32_t max_exp, SubsumMode mode,
                                                     const SearchOptions& opts = {});

/// A set of powers base^n, stored by exponent.
struct PowerSet {
    Prime base;
    std::set<std::uint32_t> exponents;

    bool contains(std::uint32_t n) const { return exponents.count(n) != 0; }
    std::optional<std::uint32_t> max_exponent() const;
    std::vector<std::string> to_strings() const;
    friend bool operator==(const PowerSet&, const PowerSet&) = default;
};

/// p-powers on the p-side of side-subsum-free solutions with at most k
/// p-terms and at most l q-terms.
PowerSet f_set(Prime p, Prime q, std::uint32_t k, std::uint32_t l, std::uint32_t max_exp,
               const SearchOptions& opts = {});

/// Union of f_set over k, l <= s.
PowerSet f_cumulative(Prime p, Prime q, std::uint32_t s, std::uint32_t max_exp, const SearchOptions& opts = {});

/// f_cumulative for s = 1..s_max (index s-1) from already enumerated
/// side-subsum-free solutions with both term counts <= s_max. With
/// `q_side`, the q-powers are collected instead (the mirrored F-sets).
std::vector<PowerSet> f_cumulative_from(const std::vector<JointSolution>& solutions, Prime base, std::uint32_t s_max,
                                        bool q_side);

/// Values of x_1+...+x_k over all solutions where each x_i is 0 or +-p^a and
/// each y_j is 0 or +-q^b, exponents <= max_exp. Always contains 0.
std::set<BigInt> admissible_sums(Prime p, Prime q, std::uint32_t k, std::uint32_t l, std::uint32_t max_exp,
                                 const SearchOptions& opts = {});

struct SaturationRow {
    std::uint32_t max_exp;
    std::size_t count;
    std::vector<JointSolution> added;  // versus the previous bound
};

struct SaturationReport {
    std::vector<SaturationRow> rows;
    std::optional<bool> saturated;  // absent with fewer than two bounds
};

SaturationReport saturation_report(Prime p, Prime q, std::uint32_t k, std::uint32_t l, SubsumMode mode,
                                   const std::vector<std::uint32_t>& exp_bounds, const SearchOptions& opts = {});

}  // namespace powdiag
