#include "altfermat/prover.hpp"

#include <algorithm>
#include <random>

namespace altfermat {

namespace {

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t n)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(n)};
    return std::mt19937_64(seq);
}

} // namespace

std::optional<BigInt> beta_of(const BigInt& a, const BigInt& b, const BigInt& c, std::uint64_t n)
{
    if (n == 0)
        return std::nullopt;
    const BigInt diff = a + b - c;
    const BigInt two_n = BigInt(static_cast<unsigned long>(n)) * 2;
    if (!mpz_divisible_p(diff.get_mpz_t(), two_n.get_mpz_t()))
        return std::nullopt;
    BigInt beta;
    mpz_divexact(beta.get_mpz_t(), diff.get_mpz_t(), two_n.get_mpz_t());
    return beta;
}

IdentityTriple make_triple(BigInt a, BigInt b, BigInt c, std::uint64_t n)
{
    if (n < 2)
        throw DomainError("identity exponent must be at least 2, got " + std::to_string(n));
    auto beta = beta_of(a, b, c, n);
    return {std::move(a), std::move(b), std::move(c), n, std::move(beta)};
}

IdentityCheck verify_identity(const IdentityTriple& t)
{
    if (t.n < 2)
        throw DomainError("identity exponent must be at least 2, got " + std::to_string(t.n));
    const auto& [a, b, c, n, beta] = t;
    BigInt lhs = pow(a, n) + pow(b, n) - pow(c, n);

    const BigInt s = a + b;
    BigInt rhs = pow(s - c, n) - truncated_binomial_sum(a, b, n) -
                 truncated_binomial_sum(s, BigInt(-c), n);
    if (n % 2 == 0)
        rhs -= 2 * pow(c, n);

    const bool equal = lhs == rhs;
    return {std::move(lhs), std::move(rhs), equal};
}

BigInt core_equation_residual(const IdentityTriple& t)
{
    if (!t.beta)
        throw DomainError("core_equation_residual: A + B - C is not divisible by 2n");
    const BigInt two_beta_n = 2 * *t.beta * static_cast<unsigned long>(t.n);
    if (two_beta_n != t.a_val + t.b_val - t.c_val)
        throw DomainError("core_equation_residual: beta does not satisfy A + B - C = 2 beta n");

    BigInt residual = truncated_binomial_value(t.a_val, t.b_val, t.n) +
                      truncated_binomial_value(t.a_val + t.b_val, BigInt(-t.c_val), t.n) -
                      pow(two_beta_n, t.n);
    if (t.n % 2 == 0)
        residual += 2 * pow(t.c_val, t.n);
    return residual;
}

IdentityTrialReport run_identity_trials(std::uint64_t n, std::uint64_t trials, std::uint64_t seed,
                                        std::int64_t magnitude)
{
    auto rng = seeded_engine(seed, n);
    std::uniform_int_distribution<std::int64_t> dist(-magnitude, magnitude);

    IdentityTrialReport report{n, trials, {}};
    for (std::uint64_t k = 0; k < trials; ++k) {
        const long a = dist(rng), b = dist(rng), c = dist(rng);
        auto t = make_triple(a, b, c, n);
        if (!verify_identity(t).equal)
            report.failures.push_back(std::move(t));
    }
    return report;
}

std::string_view to_string(Outcome o)
{
    switch (o) {
    case Outcome::proven_k1:
        return "proven_k1";
    case Outcome::proven_dichotomy:
        return "proven_dichotomy";
    case Outcome::inconclusive:
        return "inconclusive";
    }
    return "?";
}

std::string_view to_string(Caveat c)
{
    switch (c) {
    case Caveat::beta_nonunit_valuation:
        return "BETA_NONUNIT_VALUATION";
    }
    return "?";
}

std::optional<Outcome> parse_outcome(std::string_view s)
{
    for (auto o : {Outcome::proven_k1, Outcome::proven_dichotomy, Outcome::inconclusive})
        if (to_string(o) == s)
            return o;
    return std::nullopt;
}

std::optional<Caveat> parse_caveat(std::string_view s)
{
    if (s == to_string(Caveat::beta_nonunit_valuation))
        return Caveat::beta_nonunit_valuation;
    return std::nullopt;
}

bool same_findings(const ProofReport& x, const ProofReport& y)
{
    return x.n == y.n && x.outcome == y.outcome && x.pair_count == y.pair_count &&
           x.trinomial_zeros == y.trinomial_zeros && x.cofactor_zeros == y.cofactor_zeros &&
           x.v2_witnesses == y.v2_witnesses && x.caveats == y.caveats;
}

ProofReport prove_first_case(std::uint64_t n, std::uint64_t bound)
{
    require_odd_prime(n, "prove_first_case");
    require_within_bound(n, bound);
    const auto start = std::chrono::steady_clock::now();

    const auto stack = factor_stack(n);
    const auto pairs = admissible_pairs(n);

    ProofReport report;
    report.n = n;
    report.pair_count = pairs.count;
    // For n = 3 the trinomial is not a factor of U, so its zeros say nothing.
    if (stack.trinomial_exponent > 0)
        report.trinomial_zeros = zero_set(HomogeneousPoly::trinomial(), n, pairs);
    report.cofactor_zeros = zero_set(stack.cofactor, n, pairs);

    const auto classes = valuation_classes(n, bound);

    // U/n = ab(a+b) T^e H with ab(a+b) a unit, so the zero sets decide class one.
    const bool factor_zeros = !report.trinomial_zeros.empty() || !report.cofactor_zeros.empty();
    if (factor_zeros == classes.class_one_universal)
        throw InternalConsistencyError("prove_first_case(" + std::to_string(n) +
                                       "): factor zero sets disagree with the valuation classes");

    if (classes.class_one_universal) {
        report.outcome = Outcome::proven_k1;
    } else if (!classes.v2_attainable) {
        report.outcome = Outcome::proven_dichotomy;
        report.caveats.push_back(Caveat::beta_nonunit_valuation);
    } else {
        report.outcome = Outcome::inconclusive;
        report.v2_witnesses = classes.v2_witnesses;
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t max_n)
{
    std::vector<std::uint64_t> primes;
    for (std::uint64_t n = 3; n <= max_n; n += 2)
        if (is_prime(n))
            primes.push_back(n);
    return primes;
}

std::vector<ProofReport> scan(std::uint64_t max_n, std::uint64_t bound)
{
    if (max_n < 3)
        throw DomainError("scan: maximum exponent must be at least 3, got " + std::to_string(max_n));
    require_within_bound(max_n, bound);
    std::vector<ProofReport> reports;
    for (auto n : odd_primes_up_to(max_n))
        reports.push_back(prove_first_case(n, bound));
    return reports;
}

std::vector<SamplePair> law_samples(std::uint64_t n, std::uint64_t sample_count, std::uint64_t seed)
{
    require_odd_prime(n, "law_samples");
    constexpr std::int64_t magnitude = 1'000'000;
    auto rng = seeded_engine(seed, n);
    std::uniform_int_distribution<std::int64_t> any(-magnitude, magnitude);
    std::uniform_int_distribution<int> power(1, 3);

    // Nonzero multiple of n^k within the magnitude, falling back to n^k itself.
    auto multiple = [&](int k) -> BigInt {
        BigInt step = pow(BigInt(static_cast<unsigned long>(n)), static_cast<std::uint64_t>(k));
        const std::int64_t reach = std::max<std::int64_t>(1, magnitude / step.get_si());
        std::uniform_int_distribution<std::int64_t> t(1, reach);
        std::int64_t m = t(rng);
        if (rng() & 1)
            m = -m;
        return BigInt(static_cast<long>(m)) * step;
    };

    std::vector<SamplePair> samples;
    samples.reserve(sample_count);
    for (std::uint64_t k = 0; k < sample_count; ++k) {
        BigInt a = static_cast<long>(any(rng));
        BigInt b = static_cast<long>(any(rng));
        switch (k % 4) {
        case 1:
            b = multiple(power(rng));
            break;
        case 2:
            a = multiple(power(rng));
            break;
        case 3:
            b = multiple(power(rng)) - a;
            break;
        default:
            break;
        }
        samples.emplace_back(std::move(a), std::move(b));
    }
    return samples;
}

DivisibilityLawReport check_divisibility_pairs(std::uint64_t n, std::span<const SamplePair> samples)
{
    require_odd_prime(n, "check_divisibility_laws");
    DivisibilityLawReport r;
    r.n = n;
    r.sample_count = samples.size();
    r.evenness.applicable = true;
    r.trinomial.applicable = n % 6 == 1 || n % 6 == 5;
    r.trinomial_square.applicable = n % 6 == 1;
    r.qualified_n_squared.applicable = true;

    const BigInt prime = static_cast<unsigned long>(n);
    for (const auto& [a, b] : samples) {
        const BigInt u = truncated_binomial_value(a, b, n);

        ++r.evenness.checked;
        if (!mpz_even_p(u.get_mpz_t()))
            r.evenness.failures.push_back({a, b, "U is odd"});

        const BigInt t = a * a + a * b + b * b;
        if (t != 0) {
            if (r.trinomial.applicable) {
                ++r.trinomial.checked;
                if (!mpz_divisible_p(u.get_mpz_t(), t.get_mpz_t()))
                    r.trinomial.failures.push_back({a, b, "a^2+ab+b^2 does not divide U"});
            }
            if (r.trinomial_square.applicable) {
                ++r.trinomial_square.checked;
                const BigInt t2 = t * t;
                if (!mpz_divisible_p(u.get_mpz_t(), t2.get_mpz_t()))
                    r.trinomial_square.failures.push_back({a, b, "(a^2+ab+b^2)^2 does not divide U"});
            }
        }

        const BigInt s = a + b;
        const bool da = mpz_divisible_p(a.get_mpz_t(), prime.get_mpz_t());
        const bool db = mpz_divisible_p(b.get_mpz_t(), prime.get_mpz_t());
        const bool ds = mpz_divisible_p(s.get_mpz_t(), prime.get_mpz_t());
        if (da + db + ds != 1)
            continue;
        const BigInt& arg = da ? a : (db ? b : s);
        if (arg == 0)
            continue;
        const Valuation v_arg = valuation(arg, n);
        const Valuation v_u = valuation(u, n);
        if (v_arg.value() == 1) {
            ++r.qualified_n_squared.checked;
            if (v_u != Valuation::finite(2))
                r.qualified_n_squared.failures.push_back(
                    {a, b, "v_n(U) = " + v_u.to_string() + ", expected 2"});
        } else if (v_u != Valuation::finite(2)) {
            ++r.unqualified_exception_count;
            if (r.unqualified_exceptions.size() < DivisibilityLawReport::max_recorded_exceptions)
                r.unqualified_exceptions.push_back({a, b, v_arg, v_u});
        }
    }
    return r;
}

DivisibilityLawReport check_divisibility_laws(std::uint64_t n, std::uint64_t sample_count,
                                              std::uint64_t seed)
{
    if (sample_count < 1)
        throw DomainError("check_divisibility_laws: sample_count must be at least 1");
    require_odd_prime(n, "check_divisibility_laws");
    const auto samples = law_samples(n, sample_count, seed);
    auto r = check_divisibility_pairs(n, samples);
    r.seed = seed;
    return r;
}

} // namespace altfermat
