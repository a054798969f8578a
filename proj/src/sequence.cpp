#include "divseq/sequence.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <limits>
#include <numeric>
#include <thread>

#include "divseq/numtheory.hpp"

namespace divseq {

SequenceSpec SequenceSpec::generated(std::string name, ParamMap params, Ring ring, TermGenerator generator)
{
    SequenceSpec s;
    s.name_ = std::move(name);
    s.params_ = std::move(params);
    s.ring_ = std::move(ring);
    s.generator_ = std::move(generator);
    return s;
}

SequenceSpec SequenceSpec::explicit_terms(Ring ring, std::vector<RingElement> terms)
{
    for (const auto& t : terms)
        if (!(t.ring() == ring))
            throw DomainError("ring mismatch");
    SequenceSpec s;
    s.name_ = "explicit";
    s.ring_ = std::move(ring);
    s.explicit_ = true;
    const std::size_t size = terms.size();
    s.params_["length"] = static_cast<long long>(size);
    s.generator_ = [terms = std::move(terms)](std::size_t count) {
        if (count > terms.size())
            throw UsageError("sequence has only " + std::to_string(terms.size()) + " terms, " +
                             std::to_string(count) + " requested");
        return std::vector<RingElement>(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(count));
    };
    return s;
}

std::optional<std::size_t> SequenceSpec::available() const
{
    if (!explicit_)
        return std::nullopt;
    return static_cast<std::size_t>(params_.at("length"));
}

std::vector<RingElement> SequenceSpec::generate(std::size_t count) const
{
    if (count == 0)
        throw UsageError("number of terms must be at least 1");
    auto terms = generator_(count);
    if (terms.size() != count)
        throw InternalError("generator '" + name_ + "' returned the wrong number of terms");
    return terms;
}

namespace {

void require_nonzero_terms(std::span<const RingElement> terms)
{
    if (terms.empty())
        throw UsageError("sequence prefix is empty");
    const Ring& ring = terms.front().ring();
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (!(terms[k].ring() == ring))
            throw DomainError("ring mismatch at a_" + std::to_string(k + 1));
        if (terms[k].is_zero())
            throw DomainError("term a_" + std::to_string(k + 1) + " is zero");
    }
}

/// Finds the first index in [0, count) for which `violates` holds, scanning
/// with `workers` threads. The answer does not depend on scheduling.
template <typename Pred>
std::optional<std::size_t> first_violation(std::size_t count, unsigned workers, Pred violates)
{
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> best{none};
    auto scan = [&](std::size_t start, std::size_t stride) {
        for (std::size_t i = start; i < count && i < best.load(); i += stride) {
            if (!violates(i))
                continue;
            std::size_t current = best.load();
            while (i < current && !best.compare_exchange_weak(current, i)) {
            }
            return;
        }
    };
    workers = std::max(1U, workers);
    if (workers == 1 || count < 2) {
        scan(0, 1);
    } else {
        std::vector<std::exception_ptr> errors(workers);
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back([&, w] {
                    try {
                        scan(w, workers);
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
        }
        for (const auto& e : errors)
            if (e)
                std::rethrow_exception(e);
    }
    if (best.load() == none)
        return std::nullopt;
    return best.load();
}

} // namespace

std::vector<RingElement> materialize(const SequenceSpec& spec, std::size_t count)
{
    auto terms = spec.generate(count);
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (!(terms[k].ring() == spec.ring()))
            throw DomainError("term a_" + std::to_string(k + 1) + " is not in " + spec.ring().name());
        if (terms[k].is_zero())
            throw DomainError("term a_" + std::to_string(k + 1) + " is zero");
        terms[k] = canonical(terms[k]);
    }
    return terms;
}

LcmSequenceResult lcm_sequence(std::span<const RingElement> terms)
{
    require_nonzero_terms(terms);
    LcmSequenceResult r;
    r.a.reserve(terms.size());
    r.e.reserve(terms.size() + 1);
    r.c.reserve(terms.size());
    r.e.push_back(RingElement::one(terms.front().ring()));
    for (const auto& term : terms) {
        r.a.push_back(canonical(term));
        r.e.push_back(lcm(r.e.back(), term));
        auto quotient = try_exact_div(r.e.back(), r.e[r.e.size() - 2]);
        if (!quotient)
            throw InternalError("running lcm is not divisible by its predecessor");
        r.c.push_back(std::move(*quotient));
    }
    return r;
}

LcmSequenceResult lcm_sequence(const SequenceSpec& spec, std::size_t count)
{
    return lcm_sequence(materialize(spec, count));
}

InversionResult mobius_invert(std::span<const RingElement> terms)
{
    require_nonzero_terms(terms);
    const Ring& ring = terms.front().ring();
    InversionResult r;
    for (std::size_t n = 1; n <= terms.size(); ++n) {
        RingElement numerator = RingElement::one(ring);
        RingElement denominator = RingElement::one(ring);
        for (auto d : divisors(n)) {
            const int mu = mobius(n / d);
            if (mu > 0)
                numerator = numerator * terms[d - 1];
            else if (mu < 0)
                denominator = denominator * terms[d - 1];
        }
        auto quotient = try_exact_div(numerator, denominator);
        if (quotient) {
            r.b.push_back(canonical(*quotient));
            r.exact.push_back(true);
        } else {
            r.b.push_back(std::nullopt);
            r.exact.push_back(false);
            if (!r.first_inexact)
                r.first_inexact = n;
        }
    }
    return r;
}

InversionResult mobius_invert(const SequenceSpec& spec, std::size_t count)
{
    return mobius_invert(materialize(spec, count));
}

RingElement divisor_product(std::span<const RingElement> b, std::size_t n)
{
    if (n == 0)
        throw UsageError("index must be positive");
    if (b.size() < n)
        throw UsageError("divisor product for n = " + std::to_string(n) + " needs " + std::to_string(n) +
                         " terms, got " + std::to_string(b.size()));
    RingElement product = RingElement::one(b.front().ring());
    for (auto d : divisors(n))
        product = product * b[d - 1];
    return product;
}

VerificationReport check_strong_divisibility(std::span<const RingElement> terms, ScanOptions options)
{
    require_nonzero_terms(terms);
    const std::size_t count = terms.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t m = 1; m <= count; ++m)
        for (std::size_t n = 2 * m; n <= count; n += m)
            pairs.emplace_back(m, n);
    for (std::size_t m = 2; m <= count; ++m)
        for (std::size_t n = m + 1; n <= count; ++n)
            if (n % m != 0)
                pairs.emplace_back(m, n);

    auto expected = [&](std::size_t m, std::size_t n) -> const RingElement& {
        return terms[std::gcd(m, n) - 1];
    };
    auto hit = first_violation(pairs.size(), options.workers, [&](std::size_t i) {
        const auto [m, n] = pairs[i];
        return !is_associate(gcd(terms[m - 1], terms[n - 1]), expected(m, n));
    });

    VerificationReport report{"strong_divisibility", count, true, std::nullopt};
    if (hit) {
        const auto [m, n] = pairs[*hit];
        report.holds = false;
        report.witness = Witness{
            m,
            n,
            {{"a_m", canonical(terms[m - 1]).str()},
             {"a_n", canonical(terms[n - 1]).str()},
             {"gcd(a_m,a_n)", gcd(terms[m - 1], terms[n - 1]).str()},
             {"a_gcd(m,n)", canonical(expected(m, n)).str()}},
        };
    }
    return report;
}

VerificationReport check_strong_divisibility(const SequenceSpec& spec, std::size_t count, ScanOptions options)
{
    return check_strong_divisibility(materialize(spec, count), options);
}

VerificationReport check_special_coprime_criterion(std::span<const RingElement> b, std::size_t count,
                                                   ScanOptions options)
{
    if (count == 0)
        throw UsageError("number of terms must be at least 1");
    if (b.size() < count)
        throw UsageError("criterion needs " + std::to_string(count) + " terms, got " + std::to_string(b.size()));
    const auto prefix = b.first(count);
    require_nonzero_terms(prefix);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t m = 2; m <= count; ++m)
        for (std::size_t n = m + 1; n <= count; ++n)
            if (n % m != 0)
                pairs.emplace_back(m, n);

    auto hit = first_violation(pairs.size(), options.workers, [&](std::size_t i) {
        const auto [m, n] = pairs[i];
        return !coprime(prefix[m - 1], prefix[n - 1]);
    });

    VerificationReport report{"special_coprime_criterion", count, true, std::nullopt};
    if (hit) {
        const auto [m, n] = pairs[*hit];
        report.holds = false;
        report.witness = Witness{
            m,
            n,
            {{"b_m", canonical(prefix[m - 1]).str()},
             {"b_n", canonical(prefix[n - 1]).str()},
             {"gcd(b_m,b_n)", gcd(prefix[m - 1], prefix[n - 1]).str()}},
        };
    }
    return report;
}

VerificationReport check_divisor_product(const LcmSequenceResult& lcm)
{
    VerificationReport report{"lcm_divisor_product", lcm.size(), true, std::nullopt};
    for (std::size_t n = 1; n <= lcm.size(); ++n) {
        const RingElement product = divisor_product(lcm.c, n);
        if (is_associate(product, lcm.a[n - 1]))
            continue;
        report.holds = false;
        report.witness = Witness{
            n,
            n,
            {{"a_n", lcm.a[n - 1].str()}, {"prod_{d|n} c_d", canonical(product).str()}},
        };
        break;
    }
    return report;
}

EquivalenceReport verify_equivalence(std::span<const RingElement> terms, ScanOptions options)
{
    EquivalenceReport report{
        check_strong_divisibility(terms, options),
        {},
        lcm_sequence(terms),
    };
    report.divisor_product = check_divisor_product(report.lcm);
    if (report.strong_divisibility.holds != report.divisor_product.holds)
        throw InternalError("strong divisibility and the lcm divisor-product identity disagree up to N = " +
                            std::to_string(terms.size()));
    return report;
}

EquivalenceReport verify_equivalence(const SequenceSpec& spec, std::size_t count, ScanOptions options)
{
    return verify_equivalence(materialize(spec, count), options);
}

PrimeDivisorQuotient prime_divisor_quotient(std::span<const RingElement> terms, std::size_t n)
{
    if (n < 2)
        throw UsageError("the quotient identity needs n >= 2");
    if (terms.size() < n)
        throw UsageError("need " + std::to_string(n) + " terms, got " + std::to_string(terms.size()));
    const auto prefix = terms.first(n);
    require_nonzero_terms(prefix);

    const RingElement upper = lcm_many(prefix);
    const RingElement lower = lcm_many(prefix.first(n - 1));
    auto left = try_exact_div(upper, lower);
    if (!left)
        throw InternalError("running lcm is not divisible by its predecessor");

    std::vector<RingElement> cofactors;
    for (const auto& pp : factorize(n).factors)
        cofactors.push_back(prefix[n / pp.prime - 1]);
    auto right = try_exact_div(prefix[n - 1], lcm_many(cofactors));
    if (!right)
        throw InternalError("a_" + std::to_string(n) + " is not divisible by the lcm of its maximal proper terms");
    return {canonical(*left), canonical(*right)};
}

PrimeDivisorQuotient prime_divisor_quotient(const SequenceSpec& spec, std::size_t n)
{
    return prime_divisor_quotient(materialize(spec, n), n);
}

std::vector<RingElement> read_terms(const Ring& ring, std::istream& in)
{
    std::vector<RingElement> terms;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        try {
            terms.push_back(RingElement::parse(ring, line));
        } catch (const DomainError& e) {
            throw UsageError("line " + std::to_string(line_number) + ": " + e.what());
        }
    }
    return terms;
}

SequenceSpec read_terms_file(const Ring& ring, const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open input file '" + path + "'");
    auto terms = read_terms(ring, in);
    if (terms.empty())
        throw UsageError("input file '" + path + "' holds no terms");
    auto spec = SequenceSpec::explicit_terms(ring, std::move(terms));
    return spec;
}

} // namespace divseq
