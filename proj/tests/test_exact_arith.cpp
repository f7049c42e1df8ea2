#include <doctest.h>

#include <random>
#include <vector>

#include "altfermat/exact_arith.hpp"

using namespace altfermat;

namespace {

// Pascal's triangle by repeated addition, independent of the multiplicative formula.
std::vector<std::vector<BigInt>> pascal_rows(std::size_t max_n)
{
    std::vector<std::vector<BigInt>> rows{{1}};
    for (std::size_t n = 1; n <= max_n; ++n) {
        std::vector<BigInt> row(n + 1, BigInt(1));
        for (std::size_t v = 1; v < n; ++v)
            row[v] = rows[n - 1][v - 1] + rows[n - 1][v];
        rows.push_back(std::move(row));
    }
    return rows;
}

std::uint64_t valuation_by_division(BigInt x, unsigned long p)
{
    std::uint64_t e = 0;
    while (x % p == 0) {
        x /= p;
        ++e;
    }
    return e;
}

} // namespace

TEST_CASE("binom matches small values and the Pascal recurrence")
{
    CHECK(binom(5, 2) == 10);
    CHECK(binom(11, 5) == BigInt(11 * 10 * 9 * 8 * 7) / 120);
    CHECK(binom(11, 5) == 462);
    CHECK(binom(0, 0) == 1);

    const auto rows = pascal_rows(80);
    for (std::uint64_t n = 0; n <= 80; ++n) {
        CHECK(binom(n, 0) == 1);
        CHECK(binom(n, n) == 1);
        for (std::uint64_t v = 0; v <= n; ++v) {
            REQUIRE(binom(n, v) == rows[n][v]);
            CHECK(binom(n, v) == binom(n, n - v));
        }
    }
}

TEST_CASE("binom rejects v > n")
{
    CHECK_THROWS_AS(binom(3, 4), DomainError);
}

TEST_CASE("interior binomials of a prime row are multiples of the prime")
{
    for (std::uint64_t n = 2; n < 200; ++n) {
        if (!is_prime(n))
            continue;
        for (std::uint64_t v = 1; v < n; ++v)
            REQUIRE(binom(n, v) % static_cast<unsigned long>(n) == 0);
    }
}

TEST_CASE("is_prime by trial division")
{
    const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 97, 101, 7919};
    for (auto p : primes)
        CHECK(is_prime(p));
    for (std::uint64_t c : {0, 1, 4, 9, 15, 25, 49, 91, 121, 7917})
        CHECK_FALSE(is_prime(c));
    CHECK_FALSE(is_odd_prime(2));
    CHECK(is_odd_prime(3));
}

TEST_CASE("valuation examples")
{
    CHECK(valuation(90, 3) == Valuation::finite(2));
    CHECK(valuation(2100, 5) == Valuation::finite(2));
    CHECK(valuation(7, 5) == Valuation::finite(0));
    CHECK(valuation(-250, 5) == Valuation::finite(3));
    CHECK(valuation(0, 7).is_infinite());
    CHECK_THROWS_AS(valuation(0, 7).value(), DomainError);
    CHECK(valuation(0, 7).at_least(1000));
}

TEST_CASE("valuation rejects non-prime bases")
{
    CHECK_THROWS_AS(valuation(12, 4), DomainError);
    CHECK_THROWS_AS(valuation(12, 1), DomainError);
    CHECK_THROWS_AS(valuation(12, 0), DomainError);
}

TEST_CASE("valuation agrees with repeated division and shifts by one under x*p")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(1, 1'000'000'000);
    for (int k = 0; k < 500; ++k) {
        const unsigned long p = std::vector<unsigned long>{2, 3, 5, 7, 11, 13}[k % 6];
        BigInt x = dist(rng);
        if (k % 2)
            x = -x;
        CHECK(valuation(x, p).value() == valuation_by_division(x, p));
        CHECK(valuation(x * p, p).value() == valuation(x, p).value() + 1);
    }
}

TEST_CASE("truncated binomial examples")
{
    CHECK(truncated_binomial_value(1, 1, 3) == 6);
    CHECK(truncated_binomial_value(1, 2, 5) == 210);
    CHECK(truncated_binomial_value(1, 2, 5) == 5 * 1 * 2 * 3 * 7);
    CHECK(truncated_binomial_value(9, 0, 7) == 0);
    CHECK(truncated_binomial_value(1, 1, 7) == 126);
    CHECK(truncated_binomial_value(1, 1, 7) == 7 * 2 * 3 * 3);
}

TEST_CASE("truncated binomial is even, symmetric, and matches the Pascal sum")
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> dist(-1'000'000, 1'000'000);
    const std::vector<std::uint64_t> exps{3, 5, 7, 11, 13, 17, 19, 23};
    for (int k = 0; k < 1000; ++k) {
        const BigInt a = dist(rng), b = dist(rng);
        const auto n = exps[k % exps.size()];
        const BigInt u = truncated_binomial_value(a, b, n);
        REQUIRE(u % 2 == 0);
        REQUIRE(u == truncated_binomial_value(b, a, n));
        if (k % 10 == 0)
            REQUIRE(u == truncated_binomial_sum(a, b, n));
    }
}

TEST_CASE("modular helpers")
{
    CHECK(mod_u64(BigInt(-7), 5) == 3);
    CHECK(pow_mod(3, 4, 7) == 81 % 7);
    CHECK(pow_mod(10, 0, 1) == 0);
    const std::uint64_t big = (1ULL << 62) + 11;
    CHECK(mul_mod(big, big, 1'000'000'007ULL) ==
          mod_u64(BigInt(std::to_string(big)) * BigInt(std::to_string(big)), 1'000'000'007ULL));
}
