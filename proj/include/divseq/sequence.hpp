#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "divseq/ring.hpp"

namespace divseq {

using ParamMap = std::map<std::string, long long>;

/// Produces the first N raw terms a_1..a_N of a sequence.
using TermGenerator = std::function<std::vector<RingElement>(std::size_t)>;

/**
 * Description of a sequence a_1, a_2, ... over one ring: either a named
 * generator with integer parameters (the catalog) or an explicit term list.
 */
class SequenceSpec {
public:
    static SequenceSpec generated(std::string name, ParamMap params, Ring ring, TermGenerator generator);
    static SequenceSpec explicit_terms(Ring ring, std::vector<RingElement> terms);

    const std::string& name() const { return name_; }
    const ParamMap& params() const { return params_; }
    const Ring& ring() const { return ring_; }
    bool is_explicit() const { return explicit_; }
    /// Number of terms an explicit list holds; unbounded for generators.
    std::optional<std::size_t> available() const;

    /// Raw terms as produced by the source, without normalization.
    std::vector<RingElement> generate(std::size_t count) const;

private:
    std::string name_;
    ParamMap params_;
    Ring ring_;
    bool explicit_ = false;
    TermGenerator generator_;
};

/// a_1..a_N, canonical. Throws DomainError naming the index of a zero term.
std::vector<RingElement> materialize(const SequenceSpec& spec, std::size_t count);

/// Running lcms and their quotients. Vectors are 0-based: a[k] is a_{k+1},
/// e[k] is e_{k+1}, c[k] is c_{k+1}.
struct LcmSequenceResult {
    std::vector<RingElement> a;
    /// e_1 = 1, ..., e_{N+1}; N + 1 entries.
    std::vector<RingElement> e;
    std::vector<RingElement> c;

    std::size_t size() const { return a.size(); }
};

LcmSequenceResult lcm_sequence(std::span<const RingElement> terms);
LcmSequenceResult lcm_sequence(const SequenceSpec& spec, std::size_t count);

/// Moebius-inverted terms; b[k] is empty where the division was inexact.
struct InversionResult {
    std::vector<std::optional<RingElement>> b;
    std::vector<bool> exact;
    /// 1-based index of the first inexact division.
    std::optional<std::size_t> first_inexact;

    bool all_exact() const { return !first_inexact; }
};

InversionResult mobius_invert(std::span<const RingElement> terms);
InversionResult mobius_invert(const SequenceSpec& spec, std::size_t count);

/// Product of b_d over the divisors d of n (1-based n; b[0] is b_1).
RingElement divisor_product(std::span<const RingElement> b, std::size_t n);

/// Counterexample found by a check. Indices are 1-based; values holds the
/// relevant elements in canonical text, labelled.
struct Witness {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<std::pair<std::string, std::string>> values;
};

/// Result of checking a property on the prefix of length `checked`.
/// Holding means "verified up to checked", nothing more.
struct VerificationReport {
    std::string property;
    std::size_t checked = 0;
    bool holds = true;
    std::optional<Witness> witness;
};

struct ScanOptions {
    /// Number of threads for the pairwise scans. The reported witness does
    /// not depend on it.
    unsigned workers = 1;
};

/**
 * gcd(a_m, a_n) ~ a_gcd(m,n) for all m < n <= N.
 *
 * Pairs with m | n are scanned first (divisibility a_m | a_n), then the
 * remaining pairs; within each group pairs are ordered by (m, n). The
 * witness is the first violating pair in that order.
 */
VerificationReport check_strong_divisibility(std::span<const RingElement> terms, ScanOptions options = {});
VerificationReport check_strong_divisibility(const SequenceSpec& spec, std::size_t count, ScanOptions options = {});

/// gcd(b_m, b_n) is a unit for every m < n <= N with m not dividing n.
/// Witness is the lexicographically first failing pair.
VerificationReport check_special_coprime_criterion(std::span<const RingElement> b, std::size_t count,
                                                   ScanOptions options = {});

/// a_n ~ product of c_d over d | n, for all n <= N.
VerificationReport check_divisor_product(const LcmSequenceResult& lcm);

struct EquivalenceReport {
    VerificationReport strong_divisibility;
    VerificationReport divisor_product;
    LcmSequenceResult lcm;
};

/// Checks both equivalent conditions on the prefix of length N. Throws
/// InternalError if they disagree.
EquivalenceReport verify_equivalence(std::span<const RingElement> terms, ScanOptions options = {});
EquivalenceReport verify_equivalence(const SequenceSpec& spec, std::size_t count, ScanOptions options = {});

/// Two expressions for the n-th lcm quotient of a strong divisibility sequence.
struct PrimeDivisorQuotient {
    /// [a_1..a_n] / [a_1..a_{n-1}]
    RingElement left;
    /// a_n / [a_{n/p_1}, ..., a_{n/p_s}] over the distinct primes p_i | n.
    RingElement right;

    bool agree() const { return left == right; }
};

PrimeDivisorQuotient prime_divisor_quotient(std::span<const RingElement> terms, std::size_t n);
PrimeDivisorQuotient prime_divisor_quotient(const SequenceSpec& spec, std::size_t n);

/// Reads one term per line (line k is a_k); blank lines and `#` comments are
/// skipped. Throws UsageError with the line number on malformed text.
std::vector<RingElement> read_terms(const Ring& ring, std::istream& in);
SequenceSpec read_terms_file(const Ring& ring, const std::string& path);

} // namespace divseq
