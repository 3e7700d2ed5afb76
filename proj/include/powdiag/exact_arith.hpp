#pragma once

// Exact integer/rational arithmetic, torus reduction and denominator
// support. Big integers and rationals are GMP values; everything here is
// immutable once constructed.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace powdiag {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied argument violates an operation's precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A computation would exceed a configured resource or search cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

bool is_prime(std::uint64_t n);

/// A prime number. Construction checks primality by trial division.
class Prime {
public:
    explicit Prime(std::uint64_t value);

    std::uint32_t value() const { return value_; }
    operator std::uint32_t() const { return value_; }

    friend bool operator==(Prime, Prime) = default;
    friend auto operator<=>(Prime, Prime) = default;

private:
    std::uint32_t value_;
};

BigInt pow(Prime p, std::uint32_t exponent);

/// Exponent e with p^(e-1) < |u| <= p^e; 0 for |u| <= 1.
std::uint32_t ceil_log(const BigInt& u, Prime p);

/// Finite set of primes. Members may exceed 32 bits (denominators are
/// arbitrary), but are always machine-width.
class PrimeSupport {
public:
    PrimeSupport() = default;
    explicit PrimeSupport(std::set<std::uint64_t> primes);

    const std::set<std::uint64_t>& primes() const { return primes_; }
    bool empty() const { return primes_.empty(); }
    bool contains(std::uint64_t p) const { return primes_.count(p) != 0; }
    bool subset_of(std::initializer_list<std::uint64_t> allowed) const;

    friend bool operator==(const PrimeSupport&, const PrimeSupport&) = default;

private:
    std::set<std::uint64_t> primes_;
};

/// An element of T = R/Z, held as a reduced rational in [0, 1).
class TorusElement {
public:
    TorusElement() = default;  // zero

    /// Canonical representative of r mod 1.
    static TorusElement reduce(const Rational& r);
    static TorusElement parse(std::string_view text);

    const Rational& value() const { return value_; }
    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    bool is_zero() const { return value_ == 0; }

    TorusElement operator+(const TorusElement& o) const { return reduce(value_ + o.value_); }
    TorusElement operator-(const TorusElement& o) const { return reduce(value_ - o.value_); }
    TorusElement operator-() const { return reduce(-value_); }
    TorusElement operator*(const BigInt& n) const { return reduce(value_ * Rational(n)); }

    friend bool operator==(const TorusElement& a, const TorusElement& b) { return a.value_ == b.value_; }

    std::string to_string() const;

private:
    explicit TorusElement(Rational reduced) : value_(std::move(reduced)) {}
    Rational value_{0};
};

TorusElement reduce_torus(const Rational& r);

/// Prime factors of the reduced denominator of t.
PrimeSupport denominator_support(const TorusElement& t);

/// True iff t lies in Z[1/p]/Z, i.e. t * p^n -> 0 mod 1.
bool is_p_power_character(const TorusElement& t, Prime p);

/// True iff every prime factor of d is one of `allowed` (d > 0).
bool is_smooth_over(BigInt d, std::initializer_list<std::uint32_t> allowed);

/// "a/b", or "a" when b = 1.
std::string format_rational(const Rational& r);
Rational parse_rational(std::string_view text);

std::string format_integer(const BigInt& n);
BigInt parse_integer(std::string_view text);

struct BigIntHash {
    std::size_t operator()(const BigInt& n) const noexcept;
};

}  // namespace powdiag
