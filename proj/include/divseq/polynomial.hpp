#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace divseq {

using Integer = mpz_class;

/**
 * Sparse recursive polynomial over the integers.
 *
 * A polynomial of depth k lives in Z[x_0, ..., x_{k-1}] and is stored as a
 * polynomial in the main variable x_0 whose coefficients are polynomials of
 * depth k-1 in x_1, ..., x_{k-1}. Depth 0 is a plain integer.
 *
 * Terms are kept in strictly descending exponent order with no zero
 * coefficients, so two polynomials are equal iff their storage is equal.
 * Variable names live in Ring; Poly only knows its depth.
 */
class Poly {
public:
    using Exponent = std::uint32_t;

    /// The integer zero.
    Poly() = default;
    /// An integer (depth 0).
    explicit Poly(Integer value) : value_(std::move(value)) {}

    static Poly zero(std::size_t depth);
    static Poly constant(std::size_t depth, const Integer& value);
    /// The variable x_index of Z[x_0..x_{depth-1}].
    static Poly variable(std::size_t depth, std::size_t index);
    /// c * x_0^exponent where c has depth - 1.
    static Poly term(std::size_t depth, Exponent exponent, Poly coeff);
    /// Builds a polynomial from (exponent, coefficient) pairs in any order;
    /// equal exponents are merged and zeros dropped.
    static Poly from_terms(std::size_t depth, std::vector<std::pair<Exponent, Poly>> terms);

    std::size_t depth() const { return depth_; }
    bool is_zero() const { return depth_ == 0 ? value_ == 0 : coeffs_.empty(); }
    /// True if no variable occurs (the value is an integer lifted to this depth).
    bool is_constant() const;
    /// The integer value of a depth-0 polynomial.
    const Integer& value() const { return value_; }
    /// Integer value of a constant polynomial at any depth.
    Integer constant_value() const;

    /// Number of stored terms in the main variable.
    std::size_t size() const { return coeffs_.size(); }
    Exponent exponent(std::size_t i) const { return exps_[i]; }
    const Poly& coeff(std::size_t i) const { return coeffs_[i]; }

    /// Degree in the main variable; 0 for constants and for zero.
    Exponent degree() const { return coeffs_.empty() ? 0 : exps_.front(); }
    /// Leading coefficient in the main variable (depth - 1). Requires depth > 0 and nonzero.
    const Poly& leading() const { return coeffs_.front(); }
    /// Coefficient of x_0^e, zero if absent.
    Poly coeff_of(Exponent e) const;
    /// Integer reached by repeatedly taking leading coefficients.
    const Integer& base_leading() const;
    /// Sign of base_leading(); 0 for zero.
    int sign() const;
    /// Total degree over all variables.
    std::uint64_t total_degree() const;
    /// Degree in x_index.
    Exponent degree_in(std::size_t index) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);

    /// Multiplies every coefficient by c (depth - 1).
    Poly scale(const Poly& c) const;
    /// this * c * x_0^shift with c of depth - 1.
    Poly mul_term(Exponent shift, const Poly& c) const;

private:
    std::size_t depth_ = 0;
    Integer value_;
    std::vector<Exponent> exps_;
    std::vector<Poly> coeffs_;
};

Poly pow(const Poly& base, std::uint64_t exponent);

/// Result of a trial division a = q * b + r. The division is exact iff
/// the remainder is zero; otherwise the remainder is the partially reduced
/// dividend at the point where no further exact step was possible.
struct DivisionResult {
    Poly quotient;
    Poly remainder;
    bool exact() const { return remainder.is_zero(); }
};

DivisionResult divide(const Poly& a, const Poly& b);
/// Divides each coefficient by c (depth - 1). Throws InternalError if inexact.
Poly divide_coefficients(const Poly& p, const Poly& c);

/// lc(b)^(deg a - deg b + 1) * a mod b in the main variable.
Poly pseudo_remainder(const Poly& a, const Poly& b);

/// Canonical associate: base leading coefficient positive.
Poly canonical(const Poly& p);
/// gcd of the coefficients in the main variable, canonical, depth - 1.
Poly content(const Poly& p);
Poly primitive_part(const Poly& p);
/// Canonical gcd. Either argument may be zero but not both.
Poly gcd(const Poly& a, const Poly& b);
/// Whether p is +1 or -1.
bool is_unit(const Poly& p);

/// A monomial as (exponent per variable, coefficient).
struct Monomial {
    std::vector<Poly::Exponent> exponents;
    Integer coeff;
};

/// Monomials in descending lexicographic order of exponent vectors.
std::vector<Monomial> to_monomials(const Poly& p);
/// Sums monomials of the given depth, in any order.
Poly from_monomials(std::size_t depth, std::vector<Monomial> monomials);

/// Renames variables: variable i of p becomes variable permutation[i] of the result.
Poly permute_variables(const Poly& p, const std::vector<std::size_t>& permutation);

/// Substitutes values[i] (all of the same depth) for x_i and collapses.
Poly substitute(const Poly& p, const std::vector<Poly>& values);

} // namespace divseq
