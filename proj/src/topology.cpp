#include "powdiag/topology.hpp"

#include <algorithm>

namespace powdiag {

std::vector<std::pair<BigInt, BigInt>> interleave(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    const std::size_t n = std::min(a.size(), b.size());
    std::vector<std::pair<BigInt, BigInt>> out;
    out.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        out.emplace_back(a[i], BigInt(0));
        out.emplace_back(BigInt(0), b[i]);
    }
    return out;
}

ConvergenceResult convergence_certificate(const std::vector<BigInt>& seq, Prime p, std::uint32_t k,
                                          std::uint32_t max_exp) {
    if (k < 1) throw PreconditionError("k must be >= 1");
    std::vector<std::optional<SignedPowerSum>> reps;
    reps.reserve(seq.size());
    for (const auto& u : seq) reps.push_back(min_terms_rep(u, p, k, max_exp));

    if (!seq.empty() && !reps.back()) {
        const auto first = static_cast<std::size_t>(
            std::find_if(reps.begin(), reps.end(), [](const auto& r) { return !r.has_value(); }) - reps.begin());
        const std::size_t probe = std::max<std::size_t>(64, std::size_t{k} + 1);
        auto exact = min_terms(seq[first], p, probe, max_exp);
        return ConvergenceRefusal{first, seq[first], exact ? *exact : probe + 1, exact.has_value()};
    }

    std::size_t tail = seq.size();
    while (tail > 0 && reps[tail - 1]) --tail;
    ConvergenceCertificate cert{k, tail, {}};
    for (std::size_t i = tail; i < seq.size(); ++i) cert.witnesses.push_back(*reps[i]);
    return cert;
}

std::set<BigInt> diagonal_admissible_set(Prime p, Prime q, std::uint32_t k, std::uint32_t max_exp,
                                         const SearchOptions& opts) {
    if (k < 1) throw PreconditionError("k must be >= 1");
    std::set<BigInt> out;
    for (const auto& u : admissible_sums(p, q, k, k, max_exp, opts)) {
        if (min_terms(u, p, k, max_exp) && min_terms(u, q, k, max_exp)) out.insert(u);
    }
    return out;
}

}  // namespace powdiag
