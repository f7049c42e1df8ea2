#include <doctest.h>

#include <random>

#include "altfermat/homogeneous_poly.hpp"

using namespace altfermat;

namespace {

HomogeneousPoly poly(std::initializer_list<long> cs)
{
    std::vector<BigInt> v;
    for (long c : cs)
        v.emplace_back(c);
    return HomogeneousPoly(std::move(v));
}

HomogeneousPoly quotient_of(const DivisionResult& r)
{
    REQUIRE(std::holds_alternative<HomogeneousPoly>(r));
    return std::get<HomogeneousPoly>(r);
}

} // namespace

TEST_CASE("zero polynomial is canonical")
{
    CHECK(HomogeneousPoly(std::vector<BigInt>{0, 0, 0}).degree() == 0);
    CHECK(HomogeneousPoly(std::vector<BigInt>{0, 0, 0}).is_zero());
    CHECK(HomogeneousPoly(std::vector<BigInt>{}) == HomogeneousPoly{});
    CHECK((poly({1, 2}) * HomogeneousPoly{}).is_zero());
}

TEST_CASE("build_truncated has the interior Pascal row")
{
    CHECK(build_truncated(3).poly == poly({0, 3, 3, 0}));
    CHECK(build_truncated(5).poly == poly({0, 5, 10, 10, 5, 0}));
    for (std::uint64_t n : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        const auto u = build_truncated(n).poly;
        REQUIRE(u.degree() == n);
        CHECK(u[0] == 0);
        CHECK(u[n] == 0);
        CHECK(u.is_palindromic());
    }
    CHECK_THROWS_AS(build_truncated(2), DomainError);
    CHECK_THROWS_AS(build_truncated(9), DomainError);
}

TEST_CASE("evaluate examples")
{
    CHECK(evaluate(build_truncated(3).poly, 2, 3) == 125 - 8 - 27);
    CHECK(evaluate(HomogeneousPoly::trinomial(), 1, 2) == 7);
    CHECK(evaluate(build_truncated(7).poly, 0, 0) == 0);
    CHECK(evaluate(HomogeneousPoly::trinomial(), 0, 0) == 0);
    CHECK(evaluate(poly({2, -3}), 5, 7) == 2 * 5 - 3 * 7);
}

TEST_CASE("evaluate on U agrees with the closed form")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> dist(-100'000, 100'000);
    const std::vector<std::uint64_t> exps{3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    std::vector<HomogeneousPoly> us;
    for (auto n : exps)
        us.push_back(build_truncated(n).poly);
    for (int k = 0; k < 500; ++k) {
        const std::size_t i = k % exps.size();
        const BigInt a = dist(rng), b = dist(rng);
        REQUIRE(evaluate(us[i], a, b) == truncated_binomial_value(a, b, exps[i]));
    }
}

TEST_CASE("exact_divide examples")
{
    const auto u3 = build_truncated(3).poly;
    const auto u5 = build_truncated(5).poly;

    CHECK(quotient_of(exact_divide(u5, HomogeneousPoly::trinomial())) == poly({0, 5, 5, 0}));
    CHECK(quotient_of(exact_divide(u3, poly({0, 1, 0}))) == poly({3, 3}));

    // U_5 has a simple root at a = -b: dU/da(1, -1) = 5*0^4 - 5*1 != 0.
    const auto sq = HomogeneousPoly::a_plus_b() * HomogeneousPoly::a_plus_b();
    auto r = exact_divide(u5, sq);
    REQUIRE(std::holds_alternative<DivisibilityFailure>(r));
    const auto& fail = std::get<DivisibilityFailure>(r);
    CHECK_FALSE(fail.remainder.is_zero());
    CHECK(sq * fail.quotient + fail.remainder == u5);
}

TEST_CASE("exact_divide edge cases")
{
    CHECK_THROWS_AS(exact_divide(poly({1, 1}), HomogeneousPoly{}), DomainError);
    CHECK(quotient_of(exact_divide(HomogeneousPoly{}, poly({1, 1}))).is_zero());
    CHECK(std::holds_alternative<DivisibilityFailure>(exact_divide(poly({1, 1}), poly({1, 0, 1}))));
    // Non-integral leading step.
    auto r = exact_divide(poly({3, 3}), HomogeneousPoly::constant(2));
    REQUIRE(std::holds_alternative<DivisibilityFailure>(r));
    CHECK_FALSE(std::get<DivisibilityFailure>(r).remainder.is_zero());
    // Divisor with a b-power factor.
    CHECK(quotient_of(exact_divide(poly({0, 0, 2, 6}), poly({0, 1}))) == poly({0, 2, 6}));
}

TEST_CASE("exact_divide round trip on random products")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> coeff(-50, 50);
    std::uniform_int_distribution<int> deg(0, 6);
    auto random_poly = [&] {
        std::vector<BigInt> c(deg(rng) + 1);
        for (auto& x : c)
            x = coeff(rng);
        return HomogeneousPoly(std::move(c));
    };
    for (int k = 0; k < 300; ++k) {
        const auto q = random_poly();
        const auto r = random_poly();
        if (q.is_zero())
            continue;
        const auto p = q * r;
        const auto res = exact_divide(p, q);
        REQUIRE(std::holds_alternative<HomogeneousPoly>(res));
        CHECK(q * std::get<HomogeneousPoly>(res) == p);

        // Perturbing one coefficient of a product by a non-multiple breaks divisibility
        // unless q is a unit constant.
        auto c = p.coefficients();
        c[0] += 1;
        const HomogeneousPoly p2(std::move(c));
        const auto res2 = exact_divide(p2, q);
        if (const auto* quot = std::get_if<HomogeneousPoly>(&res2))
            CHECK(q * *quot == p2);
        else
            CHECK(q * std::get<DivisibilityFailure>(res2).quotient +
                      std::get<DivisibilityFailure>(res2).remainder ==
                  p2);
    }
}

TEST_CASE("factor stack goldens")
{
    SUBCASE("n = 3")
    {
        const auto s = factor_stack(3);
        CHECK(s.trinomial_exponent == 0);
        CHECK(s.cofactor == HomogeneousPoly::constant(1));
    }
    SUBCASE("n = 5")
    {
        const auto s = factor_stack(5);
        CHECK(s.trinomial_exponent == 1);
        CHECK(s.cofactor == HomogeneousPoly::constant(1));
    }
    SUBCASE("n = 7")
    {
        const auto s = factor_stack(7);
        CHECK(s.trinomial_exponent == 2);
        CHECK(s.cofactor == HomogeneousPoly::constant(1));
    }
    SUBCASE("n = 11")
    {
        const auto s = factor_stack(11);
        CHECK(s.trinomial_exponent == 1);
        CHECK(s.cofactor == poly({1, 3, 7, 9, 7, 3, 1}));
    }
    SUBCASE("n = 13")
    {
        const auto s = factor_stack(13);
        CHECK(s.trinomial_exponent == 2);
        CHECK(s.cofactor == poly({1, 3, 8, 11, 8, 3, 1}));
    }
    SUBCASE("n = 17")
    {
        const auto s = factor_stack(17);
        CHECK(s.trinomial_exponent == 1);
        CHECK(s.cofactor.degree() == 12);
        const BigInt oracle = (pow(BigInt(2), 17) - 2) / (17 * 2 * 3);
        CHECK(oracle == 1285);
        CHECK(evaluate(s.cofactor, 1, 1) == oracle);
    }
}

TEST_CASE("factor stack re-expands to U and has a palindromic cofactor")
{
    for (std::uint64_t n = 3; n <= 61; n += 2) {
        if (!is_prime(n))
            continue;
        const auto s = factor_stack(n);
        CHECK(s.trinomial_exponent == trinomial_exponent_for(n));
        CHECK(s.cofactor.degree() == n - 3 - 2 * s.trinomial_exponent);
        CHECK(s.expand() == build_truncated(n).poly);
        CHECK(s.cofactor.is_palindromic());
    }
}

TEST_CASE("reduce_mod")
{
    const auto u5 = build_truncated(5).poly;
    CHECK(reduce_mod(u5, 5).is_zero());
    CHECK(reduce_mod(HomogeneousPoly::trinomial(), 5) == HomogeneousPoly::trinomial());
    const auto u5_over_5 = quotient_of(exact_divide(u5, HomogeneousPoly::constant(5)));
    CHECK(reduce_mod(u5_over_5, 5) == poly({0, 1, 2, 2, 1, 0}));
    CHECK(reduce_mod(poly({-1, 7}), 5) == poly({4, 2}));
    CHECK_THROWS_AS(reduce_mod(u5, 1), DomainError);
}

TEST_CASE("evaluation commutes with reduction")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(-10'000, 10'000);
    const auto h = factor_stack(23).cofactor;
    for (std::uint64_t m : {2, 3, 7, 23, 529, 12167}) {
        const auto reduced = reduce_mod(h, m);
        for (int k = 0; k < 50; ++k) {
            const BigInt a = dist(rng), b = dist(rng);
            const auto expected = mod_u64(evaluate(h, a, b), m);
            CHECK(mod_u64(evaluate(reduced, a, b), m) == expected);
            CHECK(evaluate_mod(h, mod_u64(a, m), mod_u64(b, m), m) == expected);
        }
    }
}
