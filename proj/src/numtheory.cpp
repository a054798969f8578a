#include "divseq/numtheory.hpp"

#include <algorithm>

#include "divseq/errors.hpp"

namespace divseq {

namespace {

void require_positive(std::uint64_t n)
{
    if (n == 0)
        throw UsageError("index must be positive");
}

} // namespace

Factorization factorize(std::uint64_t n)
{
    require_positive(n);
    Factorization f{n, {}};
    std::uint64_t rest = n;
    for (std::uint64_t p = 2; p <= rest / p; p += (p == 2 ? 1 : 2)) {
        if (rest % p != 0)
            continue;
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        f.factors.push_back({p, e});
    }
    if (rest > 1)
        f.factors.push_back({rest, 1});
    return f;
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out{1};
    for (const auto& [p, e] : factorize(n).factors) {
        const std::size_t existing = out.size();
        std::uint64_t power = 1;
        for (unsigned k = 1; k <= e; ++k) {
            power *= p;
            for (std::size_t i = 0; i < existing; ++i)
                out.push_back(out[i] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int mobius(std::uint64_t n)
{
    const auto f = factorize(n);
    for (const auto& pp : f.factors)
        if (pp.exponent > 1)
            return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

std::uint64_t euler_phi(std::uint64_t n)
{
    std::uint64_t phi = n;
    for (const auto& pp : factorize(n).factors)
        phi = phi / pp.prime * (pp.prime - 1);
    return phi;
}

} // namespace divseq
