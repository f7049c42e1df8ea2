#include "altfermat/residue_analyzer.hpp"

namespace altfermat {

void require_within_bound(std::uint64_t n, std::uint64_t bound)
{
    if (bound < 3 || bound > max_exponent_bound)
        throw DomainError("exponent bound " + std::to_string(bound) + " outside [3, " +
                          std::to_string(max_exponent_bound) + "]");
    if (n > bound)
        throw ResourceError("exponent " + std::to_string(n) + " exceeds the scan bound " +
                            std::to_string(bound));
}

ResidueEnumeration admissible_pairs(std::uint64_t n)
{
    require_odd_prime(n, "admissible_pairs");
    ResidueEnumeration e{n, {}, 0};
    e.pairs.reserve((n - 1) * (n - 1) / 2);
    for (std::uint64_t da = 1; da < n; ++da)
        for (std::uint64_t db = 1; db <= da; ++db)
            if (da + db != n)
                e.pairs.push_back({da, db, n});
    e.count = e.pairs.size();
    return e;
}

std::vector<ResiduePair> zero_set(const HomogeneousPoly& p, std::uint64_t n,
                                  const ResidueEnumeration& pairs)
{
    if (pairs.modulus != n)
        throw DomainError("zero_set: enumeration is modulo " + std::to_string(pairs.modulus) +
                          ", expected " + std::to_string(n));
    const auto reduced = reduce_mod(p, n);
    std::vector<ResiduePair> zeros;
    for (const auto& pr : pairs.pairs)
        if (evaluate_mod(reduced, pr.delta_a, pr.delta_b, n) == 0)
            zeros.push_back(pr);
    return zeros;
}

std::uint64_t truncated_binomial_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n,
                                     std::uint64_t m)
{
    const std::uint64_t s = pow_mod((a % m + b % m) % m, n, m);
    const std::uint64_t t = (pow_mod(a, n, m) + pow_mod(b, n, m)) % m;
    return (s + m - t) % m;
}

ValuationClassSummary valuation_classes(std::uint64_t n, std::uint64_t bound)
{
    require_odd_prime(n, "valuation_classes");
    require_within_bound(n, bound);

    auto reduced = std::get<HomogeneousPoly>(
        exact_divide(build_truncated(n).poly, HomogeneousPoly::constant(static_cast<unsigned long>(n))));
    reduced = reduce_mod(reduced, n);

    const std::uint64_t n2 = n * n;
    const std::uint64_t n3 = n2 * n;

    ValuationClassSummary summary{n, true, false, {}, {}};
    for (const auto& base : admissible_pairs(n).pairs) {
        if (evaluate_mod(reduced, base.delta_a, base.delta_b, n) != 0)
            continue;
        summary.class_one_universal = false;

        bool witnessed = false;
        for (std::uint64_t i = 0; i < n && !witnessed; ++i) {
            for (std::uint64_t j = 0; j < n; ++j) {
                const std::uint64_t a = base.delta_a + i * n;
                const std::uint64_t b = base.delta_b + j * n;
                const std::uint64_t u = truncated_binomial_mod(a, b, n, n3);
                if (u % n2 != 0)
                    throw InternalConsistencyError("valuation_classes(" + std::to_string(n) +
                                                   "): lift of a zero of U/n is not divisible by n^2");
                if (u != 0) {
                    summary.v2_witnesses.push_back({a, b});
                    witnessed = true;
                    break;
                }
            }
        }
        if (witnessed)
            summary.v2_attainable = true;
        else
            summary.high_class_pairs.push_back(base);
    }
    return summary;
}

} // namespace altfermat
