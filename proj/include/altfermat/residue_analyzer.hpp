#pragma once

// Residue-class analysis of the truncated binomial modulo a prime exponent.
//
// First-case inputs have a, b and a + b all prime to n. Up to the symmetry
// of U, their residues are the admissible pairs (da, db) with
// 1 <= db <= da <= n - 1 and da + db != n; there are (n - 1)^2 / 2 of them.

#include <cstdint>
#include <vector>

#include "altfermat/homogeneous_poly.hpp"

namespace altfermat {

inline constexpr std::uint64_t default_exponent_bound = 101;

/// Hard ceiling for any configured bound: lift arithmetic runs modulo n^3
/// in 64-bit words.
inline constexpr std::uint64_t max_exponent_bound = 1u << 20;

struct ResiduePair {
    std::uint64_t delta_a;
    std::uint64_t delta_b;
    std::uint64_t modulus;

    auto operator<=>(const ResiduePair&) const = default;
};

struct ResidueEnumeration {
    std::uint64_t modulus;
    std::vector<ResiduePair> pairs;
    std::size_t count;
};

/// A concrete representative (a, b), 1 <= a, b < n^2.
struct LiftedPair {
    std::uint64_t a;
    std::uint64_t b;

    auto operator<=>(const LiftedPair&) const = default;
};

struct ValuationClassSummary {
    std::uint64_t modulus;
    /// v_n(U) = 1 for every first-case input.
    bool class_one_universal;
    bool v2_attainable;
    /// First lift reaching v_n(U) = 2, per base pair that has one.
    std::vector<LiftedPair> v2_witnesses;
    /// Base pairs whose every lift has v_n(U) >= 3.
    std::vector<ResiduePair> high_class_pairs;
};

ResidueEnumeration admissible_pairs(std::uint64_t n);

/// Admissible pairs where P(da, db) = 0 (mod n), in enumeration order.
std::vector<ResiduePair> zero_set(const HomogeneousPoly& p, std::uint64_t n,
                                  const ResidueEnumeration& pairs);

/// U(a, b) mod m for a lifted representative, via modular powers.
std::uint64_t truncated_binomial_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n,
                                     std::uint64_t m);

/// Decides which n-adic valuations of U are attainable on first-case
/// inputs. Base pairs with U/n != 0 (mod n) have valuation exactly 1; for
/// the others every lift modulo n^2 is tested with arithmetic modulo n^3,
/// which is enough because U mod n^3 depends only on (a, b) mod n^2.
ValuationClassSummary valuation_classes(std::uint64_t n,
                                        std::uint64_t bound = default_exponent_bound);

/// Throws ResourceError when n is above the bound, DomainError when the
/// bound itself is out of range.
void require_within_bound(std::uint64_t n, std::uint64_t bound);

} // namespace altfermat
