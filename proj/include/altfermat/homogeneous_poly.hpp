#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "altfermat/exact_arith.hpp"

namespace altfermat {

/// Bivariate homogeneous integer polynomial sum_i c_i a^(d-i) b^i stored
/// densely in a-major order. The zero polynomial is always degree 0 with
/// coefficients {0}.
class HomogeneousPoly {
public:
    HomogeneousPoly() : coeffs_{0} {}

    /// Coefficients c_0..c_d; degree is size - 1. An all-zero list
    /// collapses to the canonical zero polynomial.
    explicit HomogeneousPoly(std::vector<BigInt> coeffs);

    static HomogeneousPoly constant(const BigInt& c) { return HomogeneousPoly({c}); }
    static HomogeneousPoly a() { return HomogeneousPoly({1, 0}); }
    static HomogeneousPoly b() { return HomogeneousPoly({0, 1}); }
    static HomogeneousPoly a_plus_b() { return HomogeneousPoly({1, 1}); }
    /// a^2 + ab + b^2
    static HomogeneousPoly trinomial() { return HomogeneousPoly({1, 1, 1}); }

    std::size_t degree() const { return coeffs_.size() - 1; }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }

    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
    bool is_palindromic() const;

    bool operator==(const HomogeneousPoly&) const = default;

private:
    std::vector<BigInt> coeffs_;
};

HomogeneousPoly operator*(const HomogeneousPoly& p, const HomogeneousPoly& q);
/// Sum of two polynomials of equal degree (or where one side is zero).
HomogeneousPoly operator+(const HomogeneousPoly& p, const HomogeneousPoly& q);
HomogeneousPoly operator-(const HomogeneousPoly& p, const HomogeneousPoly& q);
HomogeneousPoly pow(const HomogeneousPoly& p, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const HomogeneousPoly& p);

BigInt evaluate(const HomogeneousPoly& p, const BigInt& a, const BigInt& b);

/// P(a, b) mod m, for 64-bit residues.
std::uint64_t evaluate_mod(const HomogeneousPoly& p, std::uint64_t a, std::uint64_t b,
                           std::uint64_t m);

/// Coefficients reduced into [0, m).
HomogeneousPoly reduce_mod(const HomogeneousPoly& p, std::uint64_t m);

/// Failed exact division. `quotient` holds the partial quotient built
/// with floor division, and remainder = P - Q * quotient is nonzero.
struct DivisibilityFailure {
    HomogeneousPoly quotient;
    HomogeneousPoly remainder;
};

using DivisionResult = std::variant<HomogeneousPoly, DivisibilityFailure>;

/// Solves P = Q * R over the integers. Non-divisibility is an ordinary
/// result, not an error; Q must be nonzero.
DivisionResult exact_divide(const HomogeneousPoly& p, const HomogeneousPoly& q);

/// (a + b)^n - a^n - b^n as a polynomial.
struct TruncatedBinomial {
    std::uint64_t n;
    HomogeneousPoly poly;
};

TruncatedBinomial build_truncated(std::uint64_t n);

/// U = n * a * b * (a + b) * T^e * H, with T = a^2 + ab + b^2.
struct FactorStack {
    std::uint64_t n;
    unsigned trinomial_exponent;
    HomogeneousPoly cofactor;

    /// Re-expands the stored factors.
    HomogeneousPoly expand() const;
};

/// 0 for n = 3, 1 for n = 5 (mod 6), 2 for n = 1 (mod 6).
unsigned trinomial_exponent_for(std::uint64_t n);

FactorStack factor_stack(std::uint64_t n);

} // namespace altfermat
