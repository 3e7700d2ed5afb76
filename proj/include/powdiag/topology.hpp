#pragma once

// Sequence-level tools for G{a_n}: the interleaved sequence generating a
// product topology, the bounded-term necessary condition for convergence,
// and the finite set diagonal sequences must eventually live in.

#include "powdiag/powersum.hpp"
#include "powdiag/sunit_enum.hpp"

#include <set>
#include <utility>
#include <variant>
#include <vector>

namespace powdiag {

/// c_{2n} = (a_n, 0), c_{2n+1} = (0, b_n), over the common prefix.
std::vector<std::pair<BigInt, BigInt>> interleave(const std::vector<BigInt>& a, const std::vector<BigInt>& b);

struct ConvergenceCertificate {
    std::uint32_t k;
    std::size_t tail_start;
    std::vector<SignedPowerSum> witnesses;  // one per element from tail_start on
};

struct ConvergenceRefusal {
    std::size_t index;
    BigInt element;
    std::size_t min_terms_lower_bound;  // exact when min_terms_exact
    bool min_terms_exact;
};

using ConvergenceResult = std::variant<ConvergenceCertificate, ConvergenceRefusal>;

/// Earliest tail on which every element is a sum of at most k signed
/// powers of p (exponents <= max_exp). This is only the necessary
/// condition for convergence to 0; acceptance proves nothing more.
ConvergenceResult convergence_certificate(const std::vector<BigInt>& seq, Prime p, std::uint32_t k,
                                          std::uint32_t max_exp);

/// Integers that are both <= k-term signed p-power sums and <= k-term
/// signed q-power sums, exponents <= max_exp.
std::set<BigInt> diagonal_admissible_set(Prime p, Prime q, std::uint32_t k, std::uint32_t max_exp,
                                         const SearchOptions& opts = {});

}  // namespace powdiag
