#pragma once

#include <cstdint>
#include <vector>

namespace divseq {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = product of prime^exponent, primes strictly increasing; empty iff n == 1.
struct Factorization {
    std::uint64_t n = 1;
    std::vector<PrimePower> factors;
};

// Sequence indices are small, so everything here is trial division.
// Each function throws UsageError for n == 0.

Factorization factorize(std::uint64_t n);
/// Ascending, including 1 and n.
std::vector<std::uint64_t> divisors(std::uint64_t n);
int mobius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

} // namespace divseq
