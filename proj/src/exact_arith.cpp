#include "powdiag/exact_arith.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <vector>

namespace powdiag {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool miller_rabin(u64 n) {
    if (n < 2) return false;
    for (u64 sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % sp == 0) return n == sp;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Brent's variant of Pollard rho; n odd composite.
u64 pollard_rho(u64 n) {
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor64(u64 n, std::set<u64>& out) {
    if (n == 1) return;
    if (miller_rabin(n)) {
        out.insert(n);
        return;
    }
    u64 d = pollard_rho(n);
    factor64(d, out);
    factor64(n / d, out);
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

Prime::Prime(std::uint64_t value) : value_(0) {
    if (value > UINT32_MAX || !is_prime(value)) {
        throw PreconditionError("not a prime: " + std::to_string(value));
    }
    value_ = static_cast<std::uint32_t>(value);
}

BigInt pow(Prime p, std::uint32_t exponent) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), p.value(), exponent);
    return r;
}

std::uint32_t ceil_log(const BigInt& u, Prime p) {
    BigInt a = abs(u);
    std::uint32_t e = 0;
    BigInt pe = 1;
    while (pe < a) {
        pe *= p.value();
        ++e;
    }
    return e;
}

PrimeSupport::PrimeSupport(std::set<std::uint64_t> primes) : primes_(std::move(primes)) {
    for (auto p : primes_) {
        if (!miller_rabin(p)) throw PreconditionError("prime support member is not prime: " + std::to_string(p));
    }
}

bool PrimeSupport::subset_of(std::initializer_list<std::uint64_t> allowed) const {
    return std::all_of(primes_.begin(), primes_.end(), [&](std::uint64_t p) {
        return std::find(allowed.begin(), allowed.end(), p) != allowed.end();
    });
}

TorusElement TorusElement::reduce(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
    Rational frac = c - Rational(fl);
    frac.canonicalize();
    return TorusElement(std::move(frac));
}

TorusElement TorusElement::parse(std::string_view text) { return reduce(parse_rational(text)); }

std::string TorusElement::to_string() const { return format_rational(value_); }

TorusElement reduce_torus(const Rational& r) { return TorusElement::reduce(r); }

PrimeSupport denominator_support(const TorusElement& t) {
    BigInt d = t.denominator();
    std::set<std::uint64_t> found;
    for (unsigned long f = 2; f < 65536 && d > 1; f += (f == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(d.get_mpz_t(), f)) {
            found.insert(f);
            while (mpz_divisible_ui_p(d.get_mpz_t(), f)) mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), f);
        }
    }
    if (d > 1) {
        if (!mpz_fits_ulong_p(d.get_mpz_t())) {
            throw ResourceError("denominator cofactor exceeds machine width: " + d.get_str());
        }
        factor64(d.get_ui(), found);
    }
    return PrimeSupport(std::move(found));
}

bool is_smooth_over(BigInt d, std::initializer_list<std::uint32_t> allowed) {
    for (auto p : allowed) {
        while (d > 1 && mpz_divisible_ui_p(d.get_mpz_t(), p)) mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), p);
    }
    return d == 1;
}

bool is_p_power_character(const TorusElement& t, Prime p) { return is_smooth_over(t.denominator(), {p.value()}); }

std::string format_rational(const Rational& value) {
    Rational r(value);
    r.canonicalize();
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw PreconditionError("zero denominator in rational: " + std::string(text));
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string format_integer(const BigInt& n) { return n.get_str(); }

BigInt parse_integer(std::string_view text) {
    std::string s(text);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size() || !std::all_of(s.begin() + start, s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw PreconditionError("not an integer: '" + s + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(s, 10);
}

std::size_t BigIntHash::operator()(const BigInt& n) const noexcept {
    const mpz_srcptr z = n.get_mpz_t();
    std::size_t h = static_cast<std::size_t>(z->_mp_size) * 0x9e3779b97f4a7c15ull;
    const int limbs = z->_mp_size < 0 ? -z->_mp_size : z->_mp_size;
    for (int i = 0; i < limbs; ++i) {
        h ^= static_cast<std::size_t>(z->_mp_d[i]) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace powdiag
