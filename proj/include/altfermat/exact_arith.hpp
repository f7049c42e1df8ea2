#pragma once

// Exact integer primitives: binomial coefficients, powers, p-adic valuation
// and the truncated binomial (a + b)^n - a^n - b^n.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace altfermat {

using BigInt = mpz_class;

/// Thrown when an argument violates a documented precondition.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Thrown when a request exceeds a configured computational bound.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an exact construction that must succeed does not.
/// Signals a bug in this library rather than bad input.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Exponent of a prime in an integer. v_p(0) is infinite; its value must
/// not be compared numerically, so the accessors guard it.
class Valuation {
public:
    static Valuation finite(std::uint64_t value) { return Valuation{value, false}; }
    static Valuation infinity() { return Valuation{0, true}; }

    bool is_infinite() const { return infinite_; }

    std::uint64_t value() const
    {
        if (infinite_)
            throw DomainError("valuation of zero is infinite and has no numeric value");
        return value_;
    }

    bool operator==(const Valuation&) const = default;

    // +inf compares greater than every finite valuation.
    bool at_least(std::uint64_t k) const { return infinite_ || value_ >= k; }

    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

private:
    Valuation(std::uint64_t value, bool infinite) : value_(value), infinite_(infinite) {}

    std::uint64_t value_;
    bool infinite_;
};

/// Deterministic trial-division primality for the exponent range in use.
bool is_prime(std::uint64_t n);

inline bool is_odd_prime(std::uint64_t n) { return n > 2 && is_prime(n); }

/// Throws DomainError naming `what` unless n is an odd prime.
void require_odd_prime(std::uint64_t n, const char* what);

/// C(n, v) by the multiplicative formula with running exact division.
BigInt binom(std::uint64_t n, std::uint64_t v);

BigInt pow(const BigInt& base, std::uint64_t exponent);

/// Largest e with p^e | x. p must be prime.
Valuation valuation(const BigInt& x, std::uint64_t p);

/// (a + b)^n - a^n - b^n, evaluated in closed form.
///
/// Defined for every exponent n >= 1; the identity checks need even n too.
BigInt truncated_binomial_value(const BigInt& a, const BigInt& b, std::uint64_t n);

/// The same quantity evaluated as the interior Pascal-row sum
/// sum_{v=1}^{n-1} C(n, v) a^v b^(n-v). Used where an independent route
/// to the closed form is wanted.
BigInt truncated_binomial_sum(const BigInt& a, const BigInt& b, std::uint64_t n);

/// Non-negative residue of x modulo m (m >= 1).
std::uint64_t mod_u64(const BigInt& x, std::uint64_t m);

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);

} // namespace altfermat
