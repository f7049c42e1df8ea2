#include "altfermat/homogeneous_poly.hpp"

#include <algorithm>

namespace altfermat {

HomogeneousPoly::HomogeneousPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty() || std::all_of(coeffs_.begin(), coeffs_.end(),
                                       [](const BigInt& c) { return c == 0; }))
        coeffs_.assign(1, BigInt(0));
}

bool HomogeneousPoly::is_palindromic() const
{
    return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

HomogeneousPoly operator*(const HomogeneousPoly& p, const HomogeneousPoly& q)
{
    if (p.is_zero() || q.is_zero())
        return {};
    std::vector<BigInt> r(p.degree() + q.degree() + 1, BigInt(0));
    for (std::size_t i = 0; i <= p.degree(); ++i)
        for (std::size_t j = 0; j <= q.degree(); ++j)
            r[i + j] += p[i] * q[j];
    return HomogeneousPoly(std::move(r));
}

namespace {

HomogeneousPoly negate(const HomogeneousPoly& p)
{
    std::vector<BigInt> r = p.coefficients();
    for (auto& c : r)
        c = -c;
    return HomogeneousPoly(std::move(r));
}

HomogeneousPoly combine(const HomogeneousPoly& p, const HomogeneousPoly& q, int sign)
{
    if (q.is_zero())
        return p;
    if (p.is_zero())
        return sign > 0 ? q : negate(q);
    if (p.degree() != q.degree())
        throw DomainError("cannot add homogeneous polynomials of degrees " +
                          std::to_string(p.degree()) + " and " + std::to_string(q.degree()));
    std::vector<BigInt> r = p.coefficients();
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += sign * q[i];
    return HomogeneousPoly(std::move(r));
}

} // namespace

HomogeneousPoly operator+(const HomogeneousPoly& p, const HomogeneousPoly& q)
{
    return combine(p, q, +1);
}

HomogeneousPoly operator-(const HomogeneousPoly& p, const HomogeneousPoly& q)
{
    return combine(p, q, -1);
}

HomogeneousPoly pow(const HomogeneousPoly& p, unsigned exponent)
{
    HomogeneousPoly r = HomogeneousPoly::constant(1);
    for (unsigned i = 0; i < exponent; ++i)
        r = r * p;
    return r;
}

std::ostream& operator<<(std::ostream& os, const HomogeneousPoly& p)
{
    os << '(';
    for (std::size_t i = 0; i <= p.degree(); ++i)
        os << (i ? ", " : "") << p[i];
    return os << ')';
}

BigInt evaluate(const HomogeneousPoly& p, const BigInt& a, const BigInt& b)
{
    // Homogeneous Horner: sum c_i a^(d-i) b^i.
    BigInt acc = 0;
    BigInt b_pow = 1;
    for (std::size_t i = 0; i <= p.degree(); ++i) {
        acc = acc * a + p[i] * b_pow;
        b_pow *= b;
    }
    return acc;
}

std::uint64_t evaluate_mod(const HomogeneousPoly& p, std::uint64_t a, std::uint64_t b,
                           std::uint64_t m)
{
    a %= m;
    b %= m;
    std::uint64_t acc = 0;
    std::uint64_t b_pow = 1 % m;
    for (std::size_t i = 0; i <= p.degree(); ++i) {
        acc = (mul_mod(acc, a, m) + mul_mod(mod_u64(p[i], m), b_pow, m)) % m;
        b_pow = mul_mod(b_pow, b, m);
    }
    return acc;
}

HomogeneousPoly reduce_mod(const HomogeneousPoly& p, std::uint64_t m)
{
    if (m < 2)
        throw DomainError("reduce_mod: modulus must be at least 2, got " + std::to_string(m));
    std::vector<BigInt> r;
    r.reserve(p.degree() + 1);
    for (const auto& c : p.coefficients())
        r.emplace_back(static_cast<unsigned long>(mod_u64(c, m)));
    return HomogeneousPoly(std::move(r));
}

DivisionResult exact_divide(const HomogeneousPoly& p, const HomogeneousPoly& q)
{
    if (q.is_zero())
        throw DomainError("exact_divide: divisor is the zero polynomial");
    if (p.is_zero())
        return HomogeneousPoly{};
    if (p.degree() < q.degree())
        return DivisibilityFailure{HomogeneousPoly{}, p};

    // q = b^shift * (q_shift a^.. + ...). Solve the convolution
    // p_{j+shift} = sum_i q_i r_{j+shift-i} for r_j in increasing j.
    std::size_t shift = 0;
    while (q[shift] == 0)
        ++shift;

    const std::size_t rdeg = p.degree() - q.degree();
    std::vector<BigInt> r(rdeg + 1, BigInt(0));
    bool exact = true;
    for (std::size_t j = 0; j <= rdeg; ++j) {
        BigInt target = p[j + shift];
        for (std::size_t i = shift + 1; i <= q.degree() && i <= j + shift; ++i)
            target -= q[i] * r[j + shift - i];
        BigInt rem;
        mpz_fdiv_qr(r[j].get_mpz_t(), rem.get_mpz_t(), target.get_mpz_t(), q[shift].get_mpz_t());
        if (rem != 0)
            exact = false;
    }

    HomogeneousPoly quotient(std::move(r));
    HomogeneousPoly remainder = p - q * quotient;
    if (exact && remainder.is_zero())
        return quotient;
    return DivisibilityFailure{std::move(quotient), std::move(remainder)};
}

TruncatedBinomial build_truncated(std::uint64_t n)
{
    require_odd_prime(n, "build_truncated");
    std::vector<BigInt> c(n + 1, BigInt(0));
    for (std::uint64_t v = 1; v < n; ++v)
        c[v] = binom(n, v);
    return {n, HomogeneousPoly(std::move(c))};
}

unsigned trinomial_exponent_for(std::uint64_t n)
{
    if (n == 3)
        return 0;
    return n % 6 == 1 ? 2 : 1;
}

HomogeneousPoly FactorStack::expand() const
{
    return HomogeneousPoly::constant(static_cast<unsigned long>(n)) * HomogeneousPoly::a() *
           HomogeneousPoly::b() * HomogeneousPoly::a_plus_b() *
           pow(HomogeneousPoly::trinomial(), trinomial_exponent) * cofactor;
}

FactorStack factor_stack(std::uint64_t n)
{
    const auto u = build_truncated(n);
    const unsigned e = trinomial_exponent_for(n);

    std::vector<std::pair<const char*, HomogeneousPoly>> divisors{
        {"n", HomogeneousPoly::constant(static_cast<unsigned long>(n))},
        {"a", HomogeneousPoly::a()},
        {"b", HomogeneousPoly::b()},
        {"a+b", HomogeneousPoly::a_plus_b()},
    };
    for (unsigned i = 0; i < e; ++i)
        divisors.emplace_back("a^2+ab+b^2", HomogeneousPoly::trinomial());

    HomogeneousPoly rest = u.poly;
    for (const auto& [name, d] : divisors) {
        auto step = exact_divide(rest, d);
        if (std::holds_alternative<DivisibilityFailure>(step))
            throw InternalConsistencyError("factor_stack(" + std::to_string(n) +
                                           "): division by " + name + " left a remainder");
        rest = std::get<HomogeneousPoly>(std::move(step));
    }
    return {n, e, std::move(rest)};
}

} // namespace altfermat
