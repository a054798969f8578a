#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "divseq/errors.hpp"
#include "divseq/polynomial.hpp"

namespace divseq {

/**
 * One of the instantiated gcd-domains: Z, or Z[v_0, ..., v_{k-1}] with the
 * variables in a fixed order. The first variable is the main (outermost)
 * variable of the recursive representation.
 */
class Ring {
public:
    /// The integers.
    Ring() = default;
    explicit Ring(std::vector<std::string> variables);

    static Ring integers() { return Ring(); }
    /// Parses "ZZ", "" or a comma-separated variable list such as "x,y".
    static Ring parse(std::string_view signature);

    bool is_integer() const { return num_variables() == 0; }
    std::size_t num_variables() const { return vars_ ? vars_->size() : 0; }
    const std::vector<std::string>& variables() const;
    std::optional<std::size_t> index_of(std::string_view name) const;
    /// "ZZ" or "ZZ[x,y]".
    std::string name() const;

    friend bool operator==(const Ring& a, const Ring& b) { return a.variables() == b.variables(); }

private:
    std::shared_ptr<const std::vector<std::string>> vars_;
};

/**
 * An element of a Ring. Arithmetic (+, -, *, pow, eval) is exact and keeps
 * the sign it produces; gcd-domain operations (gcd, lcm, normalize,
 * exact_div of canonical inputs) return canonical associates.
 */
class RingElement {
public:
    /// Integer zero.
    RingElement() = default;
    RingElement(Ring ring, Poly value);
    RingElement(Ring ring, const Integer& value);

    static RingElement one(const Ring& ring) { return RingElement(ring, Integer(1)); }
    static RingElement variable(const Ring& ring, std::string_view name);
    /// Parses text in the polynomial syntax of `ring`.
    static RingElement parse(const Ring& ring, std::string_view text);

    const Ring& ring() const { return ring_; }
    const Poly& poly() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }
    bool is_unit() const { return divseq::is_unit(value_); }
    bool is_constant() const { return value_.is_constant(); }
    /// Integer value; requires is_constant().
    Integer to_integer() const { return value_.constant_value(); }

    /// Canonical text, e.g. "x^4+x^3-x-1".
    std::string str() const;

    RingElement operator-() const { return {ring_, -value_}; }
    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    friend bool operator==(const RingElement& a, const RingElement& b)
    {
        return a.ring_ == b.ring_ && a.value_ == b.value_;
    }

private:
    Ring ring_;
    Poly value_;
};

/// Raised by exact_div when the divisor does not divide the dividend.
class InexactDivision : public Error {
public:
    InexactDivision(RingElement dividend, RingElement divisor, RingElement remainder);

    const RingElement& dividend() const { return dividend_; }
    const RingElement& divisor() const { return divisor_; }
    /// Witness that the division failed: nonzero, and dividend - q*divisor for
    /// the partial quotient q reached.
    const RingElement& remainder() const { return remainder_; }

private:
    RingElement dividend_;
    RingElement divisor_;
    RingElement remainder_;
};

struct UnitAndCanonical {
    RingElement canonical;
    /// +1 or -1, with unit * canonical == input.
    RingElement unit;
};

RingElement pow(const RingElement& base, std::uint64_t exponent);

RingElement gcd(const RingElement& a, const RingElement& b);
RingElement lcm(const RingElement& a, const RingElement& b);
RingElement gcd_many(std::span<const RingElement> elems);
RingElement lcm_many(std::span<const RingElement> elems);

/// q with b * q == a; throws InexactDivision otherwise.
RingElement exact_div(const RingElement& a, const RingElement& b);
/// As exact_div, but reports inexactness as an empty optional.
std::optional<RingElement> try_exact_div(const RingElement& a, const RingElement& b);
bool divides(const RingElement& d, const RingElement& a);

UnitAndCanonical normalize(const RingElement& a);
/// Canonical associate of a nonzero element.
RingElement canonical(const RingElement& a);
bool is_associate(const RingElement& a, const RingElement& b);
/// Whether gcd(a, b) is a unit.
bool coprime(const RingElement& a, const RingElement& b);

/// Substitutes for every variable of p. Values may be integers or elements
/// of one common polynomial ring; the result lives in that ring (or Z).
RingElement eval(const RingElement& p, const std::map<std::string, RingElement>& assignment);

/// Re-expresses p in `target`, a ring with the same variables in another order.
RingElement reorder(const RingElement& p, const Ring& target);

} // namespace divseq
