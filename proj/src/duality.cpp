#include "powdiag/duality.hpp"

namespace powdiag {

namespace {

std::string ps(Prime p) { return std::to_string(p.value()); }

std::uint32_t strip(BigInt& d, Prime p) {
    std::uint32_t a = 0;
    while (mpz_divisible_ui_p(d.get_mpz_t(), p.value())) {
        mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), p.value());
        ++a;
    }
    return a;
}

}  // namespace

ProductCharacter::ProductCharacter(TorusElement alpha, TorusElement beta, Prime p, Prime q)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), p_(p), q_(q) {
    if (p_ == q_) throw PreconditionError("primes must be distinct");
    if (!is_p_power_character(alpha_, p_)) {
        throw PreconditionError("alpha = " + alpha_.to_string() + " is not in Z[1/" + ps(p_) + "]/Z");
    }
    if (!is_p_power_character(beta_, q_)) {
        throw PreconditionError("beta = " + beta_.to_string() + " is not in Z[1/" + ps(q_) + "]/Z");
    }
}

TorusElement eval_char(const ProductCharacter& chi, const BigInt& u, const BigInt& v) {
    return reduce_torus(chi.alpha().value() * Rational(u) + chi.beta().value() * Rational(v));
}

bool vanishes_on_diagonal(const ProductCharacter& chi) { return (chi.alpha() + chi.beta()).is_zero(); }

AnnihilatorDerivation diagonal_annihilator(Prime p, Prime q) {
    if (p == q) throw PreconditionError("primes must be distinct");
    const std::string P = ps(p), Q = ps(q);
    AnnihilatorDerivation d{p, q, {}, true};
    d.steps = {
        "every character of Z{" + P + "^n} x Z{" + Q + "^n} is chi(u,v) = alpha*u + beta*v with alpha in Z[1/" + P +
            "]/Z and beta in Z[1/" + Q + "]/Z",
        "chi vanishes on the diagonal iff chi(1,1) = alpha + beta = 0 mod 1",
        "then alpha = -beta mod 1, so the denominator of alpha has prime support in {" + P + "} and in {" + Q + "}",
        "{" + P + "} and {" + Q + "} are disjoint, so the denominator of alpha is 1: alpha = 0 and beta = 0",
        "the annihilator of the diagonal is the zero character alone, which separates no point from the diagonal",
    };
    return d;
}

ExtensionResult is_extendable_diag_char(const TorusElement& t, Prime p, Prime q) {
    if (p == q) throw PreconditionError("primes must be distinct");
    BigInt rest = t.denominator();
    const std::uint32_t a = strip(rest, p);
    strip(rest, q);
    if (rest != 1) return {false, {}, {}};

    // alpha = x/p^a with x * q^b = numerator (mod p^a), least x >= 0.
    TorusElement alpha;
    if (a > 0) {
        const BigInt pa = pow(p, a);
        BigInt qb = t.denominator() / pa;
        BigInt inv;
        mpz_invert(inv.get_mpz_t(), qb.get_mpz_t(), pa.get_mpz_t());
        BigInt x = t.numerator() * inv;
        mpz_mod(x.get_mpz_t(), x.get_mpz_t(), pa.get_mpz_t());
        alpha = reduce_torus(Rational(x, pa));
    }
    TorusElement beta = t - alpha;
    return {true, alpha, beta};
}

X1Witness x1_witness(Prime p, Prime q) { return {BigInt(1), BigInt(0), diagonal_annihilator(p, q)}; }

TorusElement x2_witness(Prime p, Prime q) {
    if (p == q) throw PreconditionError("primes must be distinct");
    std::uint64_t r = 2;
    while (!is_prime(r) || r == p.value() || r == q.value()) ++r;
    return reduce_torus(Rational(1, static_cast<unsigned long>(r)));
}

TorusElement separating_character(Prime p, std::uint32_t m, const BigInt& g) {
    const BigInt pm = pow(p, m);
    if (mpz_divisible_p(g.get_mpz_t(), pm.get_mpz_t())) {
        throw PreconditionError("g in subgroup: " + g.get_str() + " lies in " + pm.get_str() + "Z");
    }
    return reduce_torus(Rational(BigInt(1), pm));
}

TorusElement extend_subgroup_character(Prime p, std::uint32_t m, const TorusElement& t) {
    if (!is_p_power_character(t, p)) {
        throw PreconditionError("t = " + t.to_string() + " is not a continuous character: not in Z[1/" + ps(p) + "]/Z");
    }
    return reduce_torus(t.value() / Rational(pow(p, m)));
}

}  // namespace powdiag
