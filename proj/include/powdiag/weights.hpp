#pragma once

// Weight functions delta(p^n) = 1 / min{s : p^n <= max F(p,q,s)} built from
// bounded F-sets, cap-restricted norms, and the diagonal discreteness
// certificate.

#include "powdiag/sunit_enum.hpp"

#include <map>
#include <vector>

namespace powdiag {

/// Thrown when a power lies beyond a weight table's domain.
class DomainExceeded : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Thrown when no representation exists under the given caps.
class NotRepresentable : public ResourceError {
public:
    using ResourceError::ResourceError;
};

class WeightTable {
public:
    struct Entry {
        Rational weight;
        std::uint32_t min_s;
    };

    /// `fmax[s-1]` is the largest exponent in F(p,q,s) for s = 1..s_max.
    WeightTable(Prime p, Prime q, std::uint32_t s_max, std::uint32_t max_exp, std::vector<std::uint32_t> fmax);

    Prime p() const { return p_; }
    Prime q() const { return q_; }
    std::uint32_t s_max() const { return s_max_; }
    std::uint32_t max_exp() const { return max_exp_; }

    /// Largest n with p^n in the domain.
    std::uint32_t max_domain_exponent() const { return static_cast<std::uint32_t>(entries_.size() - 1); }
    bool in_domain(std::uint32_t n) const { return n < entries_.size(); }

    /// Throws DomainExceeded outside the domain.
    const Entry& entry(std::uint32_t n) const;
    const Rational& weight(std::uint32_t n) const { return entry(n).weight; }
    const std::vector<Entry>& entries() const { return entries_; }
    const std::vector<std::uint32_t>& f_max_exponents() const { return fmax_; }

private:
    Prime p_, q_;
    std::uint32_t s_max_, max_exp_;
    std::vector<std::uint32_t> fmax_;
    std::vector<Entry> entries_;  // indexed by exponent
};

/// Builds delta for (p, q); with roles swapped this is epsilon.
WeightTable build_delta(Prime p, Prime q, std::uint32_t s_max, std::uint32_t max_exp, const SearchOptions& opts = {});

/// Builds the table for `base` from side-subsum-free solutions with both
/// term counts <= s_max; `q_side` selects which side holds `base`. Checks
/// p^n in F(p,q,s) => delta(p^n) >= 1/s for every enumerated member.
WeightTable build_weight_table(const std::vector<JointSolution>& solutions, Prime base, Prime partner,
                               std::uint32_t s_max, std::uint32_t max_exp, bool q_side);

struct NormBound {
    Rational upper_bound;
    SignedPowerSum rep;
};

/// Minimum total weight over representations of u with <= max_terms terms
/// inside the table's domain. An upper bound on the true norm.
NormBound restricted_norm(const BigInt& u, const WeightTable& table, std::uint32_t max_terms,
                          const SearchOptions& opts = {});

struct WeightCheck {
    bool passed = false;
    std::uint32_t s = 0;  // max(k, l)
    Rational threshold;   // 1/s
    std::vector<Rational> p_margins;  // weight - 1/s, per p-side term
    std::vector<Rational> q_margins;
    Rational p_total;
    Rational q_total;
};

WeightCheck joint_weight_check(const JointSolution& sol, const WeightTable& dtab, const WeightTable& etab);

struct DiscretenessReport {
    bool passed = false;
    Prime p, q;
    std::uint32_t s, max_exp;
    std::size_t solutions_checked = 0;
    std::vector<BigInt> values;  // nonzero jointly representable u, sorted
    std::vector<JointSolution> failures;
};

DiscretenessReport diagonal_discreteness_certificate(Prime p, Prime q, std::uint32_t s, std::uint32_t max_exp,
                                                     const SearchOptions& opts = {});

}  // namespace powdiag
