#pragma once

// Characters of Z{p^n}, of Z{p^n} x Z{q^n}, and of the diagonal
// {(u, u)}. A character of Z{p^n} is t in Z[1/p]/Z acting by u -> t*u.

#include "powdiag/exact_arith.hpp"

#include <string>
#include <utility>
#include <vector>

namespace powdiag {

/// chi(u, v) = alpha*u + beta*v with alpha in Z[1/p]/Z and beta in Z[1/q]/Z.
class ProductCharacter {
public:
    /// Throws PreconditionError when a support constraint fails or p == q.
    ProductCharacter(TorusElement alpha, TorusElement beta, Prime p, Prime q);

    const TorusElement& alpha() const { return alpha_; }
    const TorusElement& beta() const { return beta_; }
    Prime p() const { return p_; }
    Prime q() const { return q_; }
    bool is_zero() const { return alpha_.is_zero() && beta_.is_zero(); }

private:
    TorusElement alpha_, beta_;
    Prime p_, q_;
};

TorusElement eval_char(const ProductCharacter& chi, const BigInt& u, const BigInt& v);

/// alpha + beta = 0 mod 1, i.e. chi(u, u) = 0 for every u.
bool vanishes_on_diagonal(const ProductCharacter& chi);

/// Step-by-step argument that only the zero character of the product
/// vanishes on the diagonal.
struct AnnihilatorDerivation {
    Prime p, q;
    std::vector<std::string> steps;
    bool annihilator_trivial = true;
};

AnnihilatorDerivation diagonal_annihilator(Prime p, Prime q);

/// A character t of the diagonal (its value at (1,1)) extends to the
/// product iff its denominator is {p,q}-smooth; the split t = alpha + beta
/// witnesses the extension.
struct ExtensionResult {
    bool extendable = false;
    TorusElement alpha;
    TorusElement beta;
};

ExtensionResult is_extendable_diag_char(const TorusElement& t, Prime p, Prime q);

struct X1Witness {
    BigInt u, v;  // a point of the product off the diagonal
    AnnihilatorDerivation derivation;
};

/// (1, 0): no character vanishing on the diagonal separates it.
X1Witness x1_witness(Prime p, Prime q);

/// 1/r for the smallest prime r outside {p, q}: a non-extendable character
/// of the diagonal.
TorusElement x2_witness(Prime p, Prime q);

/// 1/p^m, which kills p^m Z and is non-zero at g. Throws when p^m | g.
TorusElement separating_character(Prime p, std::uint32_t m, const BigInt& g);

/// Extends the character of p^m Z with value t at p^m to Z{p^n}.
TorusElement extend_subgroup_character(Prime p, std::uint32_t m, const TorusElement& t);

}  // namespace powdiag
