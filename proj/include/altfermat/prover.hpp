#pragma once

// Identity checks for the split form of A^n + B^n - C^n and the first-case
// incompatibility pipeline.
//
// Outcomes are "proven" only in the sense of the incompatibility criterion:
// with A + B - C = 2 beta n, the core equation (2 beta n)^n = U(A, B) +
// U(A + B, -C) needs v_n(U(A, B)) = 2 when beta is prime to n. A report is
// proven_k1 when v_n(U(A, B)) = 1 on every first-case input, and
// proven_dichotomy when v_n(U(A, B)) is 1 or at least 3 but never 2. The
// latter leans on beta being prime to n and always carries
// BETA_NONUNIT_VALUATION.

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "altfermat/residue_analyzer.hpp"

namespace altfermat {

struct IdentityTriple {
    BigInt a_val;
    BigInt b_val;
    BigInt c_val;
    std::uint64_t n;
    /// Present iff A + B - C is divisible by 2n.
    std::optional<BigInt> beta;
};

/// (A + B - C) / (2n) when exact.
std::optional<BigInt> beta_of(const BigInt& a, const BigInt& b, const BigInt& c, std::uint64_t n);

/// Builds a triple with beta derived from the values. n >= 2.
IdentityTriple make_triple(BigInt a, BigInt b, BigInt c, std::uint64_t n);

struct IdentityCheck {
    BigInt lhs;
    BigInt rhs;
    bool equal;
};

/// lhs = A^n + B^n - C^n directly; rhs = (A+B-C)^n [- 2C^n for even n]
/// - U(A, B) - U(A+B, -C) with U summed term by term over the Pascal row.
IdentityCheck verify_identity(const IdentityTriple& t);

/// U(A, B) + U(A+B, -C) [+ 2C^n for even n] - (2 beta n)^n, which equals
/// -(A^n + B^n - C^n). Requires beta.
BigInt core_equation_residual(const IdentityTriple& t);

struct IdentityTrialReport {
    std::uint64_t n;
    std::uint64_t trials;
    std::vector<IdentityTriple> failures;
};

/// Seeded random triples with |A|, |B|, |C| <= magnitude.
IdentityTrialReport run_identity_trials(std::uint64_t n, std::uint64_t trials, std::uint64_t seed,
                                        std::int64_t magnitude = 1'000'000);

enum class Outcome { proven_k1, proven_dichotomy, inconclusive };

enum class Caveat { beta_nonunit_valuation };

std::string_view to_string(Outcome o);
std::string_view to_string(Caveat c);
std::optional<Outcome> parse_outcome(std::string_view s);
std::optional<Caveat> parse_caveat(std::string_view s);

inline bool is_proven(Outcome o) { return o != Outcome::inconclusive; }

struct ProofReport {
    std::uint64_t n = 0;
    Outcome outcome = Outcome::inconclusive;
    std::uint64_t pair_count = 0;
    std::vector<ResiduePair> trinomial_zeros;
    std::vector<ResiduePair> cofactor_zeros;
    std::vector<LiftedPair> v2_witnesses;
    std::vector<Caveat> caveats;
    std::chrono::duration<double> elapsed{};
};

/// Equality on everything except elapsed.
bool same_findings(const ProofReport& x, const ProofReport& y);

ProofReport prove_first_case(std::uint64_t n, std::uint64_t bound = default_exponent_bound);

/// One report per odd prime in [3, max_n], ascending.
std::vector<ProofReport> scan(std::uint64_t max_n, std::uint64_t bound = default_exponent_bound);

std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t max_n);

// Divisibility laws of U.

struct LawCounterexample {
    BigInt a;
    BigInt b;
    std::string detail;
};

struct LawTally {
    bool applicable = false;
    std::uint64_t checked = 0;
    std::vector<LawCounterexample> failures;

    bool passed() const { return failures.empty(); }
};

/// A sample where the n-divisible argument has valuation >= 2, so the
/// unqualified "divisible only by n^2" reading does not hold.
struct UnqualifiedException {
    BigInt a;
    BigInt b;
    Valuation argument_valuation;
    Valuation u_valuation;
};

struct DivisibilityLawReport {
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    std::uint64_t sample_count = 0;
    LawTally evenness;
    /// T | U, n = +-1 (mod 6)
    LawTally trinomial;
    /// T^2 | U, n = 1 (mod 6)
    LawTally trinomial_square;
    /// exactly one of a, b, a+b divisible by n, with valuation 1 => v_n(U) = 2
    LawTally qualified_n_squared;
    std::uint64_t unqualified_exception_count = 0;
    /// At most max_recorded_exceptions entries, in sample order.
    std::vector<UnqualifiedException> unqualified_exceptions;

    static constexpr std::size_t max_recorded_exceptions = 20;

    bool all_pass() const
    {
        return evenness.passed() && trinomial.passed() && trinomial_square.passed() &&
               qualified_n_squared.passed();
    }
};

using SamplePair = std::pair<BigInt, BigInt>;

/// Seeded samples of magnitude up to about 10^6. A quarter are uniform; the
/// rest force a, b or a + b to be a nonzero multiple of n, n^2 or n^3.
std::vector<SamplePair> law_samples(std::uint64_t n, std::uint64_t sample_count, std::uint64_t seed);

DivisibilityLawReport check_divisibility_pairs(std::uint64_t n, std::span<const SamplePair> samples);

DivisibilityLawReport check_divisibility_laws(std::uint64_t n, std::uint64_t sample_count,
                                              std::uint64_t seed);

} // namespace altfermat
