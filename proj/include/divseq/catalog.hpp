#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "divseq/sequence.hpp"

namespace divseq {

enum class Expectation { strong, not_strong, unknown };

std::string_view to_string(Expectation e);

struct CatalogParam {
    std::string name;
    long long default_value;
    std::string description;
};

struct CatalogEntry {
    std::string name;
    std::vector<CatalogParam> params;
    Ring ring;
    /// Whether the sequence (with default parameters) is a strong
    /// divisibility sequence.
    Expectation expected;
    std::string note;
};

/// All built-in sequences, in listing order.
const std::vector<CatalogEntry>& catalog();
/// Throws UsageError listing the known names if `name` is unknown.
const CatalogEntry& catalog_entry(std::string_view name);

/// Instantiates a built-in sequence. Missing parameters take their defaults;
/// unknown or out-of-range parameters raise UsageError.
SequenceSpec builtin(std::string_view name, const ParamMap& params = {});

/// Z[x], Z[x,y], Z[x,y,z] as used by the catalog.
const Ring& ring_x();
const Ring& ring_xy();
const Ring& ring_xyz();

/// n-th cyclotomic polynomial in Z[x], as the n-th lcm quotient of x^k - 1.
RingElement cyclotomic_phi(std::size_t n);
/// Phi_1 .. Phi_count from a single lcm-sequence run.
std::vector<RingElement> cyclotomic_phis(std::size_t count);
/// Phi_n(b) as the n-th lcm quotient of b^k - 1, for b >= 2.
Integer cyclotomic_phi_at(std::size_t n, long long b);
/// Homogeneous cyclotomic polynomial in Z[x,y]: the Moebius product of
/// (x^d - y^d)^mu(n/d), with one exact division.
RingElement psi(std::size_t n);

} // namespace divseq
