#include "altfermat/exact_arith.hpp"

namespace altfermat {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    if (n < 4)
        return true;
    if (n % 2 == 0 || n % 3 == 0)
        return false;
    for (std::uint64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0)
            return false;
    }
    return true;
}

void require_odd_prime(std::uint64_t n, const char* what)
{
    if (!is_odd_prime(n))
        throw DomainError(std::string(what) + ": exponent " + std::to_string(n) +
                          " is not an odd prime");
}

BigInt binom(std::uint64_t n, std::uint64_t v)
{
    if (v > n)
        throw DomainError("binom: v = " + std::to_string(v) + " exceeds n = " + std::to_string(n));
    if (v > n - v)
        v = n - v;
    BigInt c = 1;
    // After step i, c == C(n - v + i, i); each division is exact.
    for (std::uint64_t i = 1; i <= v; ++i) {
        c *= static_cast<unsigned long>(n - v + i);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return c;
}

BigInt pow(const BigInt& base, std::uint64_t exponent)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
    return r;
}

Valuation valuation(const BigInt& x, std::uint64_t p)
{
    if (!is_prime(p))
        throw DomainError("valuation: p = " + std::to_string(p) + " is not prime");
    if (x == 0)
        return Valuation::infinity();
    BigInt prime = static_cast<unsigned long>(p);
    BigInt rest;
    auto e = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t());
    return Valuation::finite(e);
}

BigInt truncated_binomial_value(const BigInt& a, const BigInt& b, std::uint64_t n)
{
    return pow(a + b, n) - pow(a, n) - pow(b, n);
}

BigInt truncated_binomial_sum(const BigInt& a, const BigInt& b, std::uint64_t n)
{
    BigInt sum = 0;
    for (std::uint64_t v = 1; v < n; ++v)
        sum += binom(n, v) * pow(a, v) * pow(b, n - v);
    return sum;
}

std::uint64_t mod_u64(const BigInt& x, std::uint64_t m)
{
    return mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(m));
}

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    base %= m;
    while (exponent != 0) {
        if (exponent & 1)
            r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exponent >>= 1;
    }
    return r;
}

} // namespace altfermat
