#pragma once

#include <random>
#include <string>
#include <vector>

#include "divseq/catalog.hpp"
#include "divseq/ring.hpp"
#include "oracles.hpp"

namespace testing {

using divseq::Integer;
using divseq::Ring;
using divseq::RingElement;

inline RingElement zz(long long v)
{
    return RingElement(Ring::integers(), Integer(static_cast<long>(v)));
}

inline RingElement zz(const std::string& digits)
{
    return RingElement(Ring::integers(), Integer(digits));
}

inline RingElement px(const std::string& text)
{
    return RingElement::parse(divseq::ring_x(), text);
}

inline RingElement pxy(const std::string& text)
{
    return RingElement::parse(divseq::ring_xy(), text);
}

inline RingElement pxyz(const std::string& text)
{
    return RingElement::parse(divseq::ring_xyz(), text);
}

inline std::vector<RingElement> zz_list(const std::vector<long long>& values)
{
    std::vector<RingElement> out;
    for (auto v : values)
        out.push_back(zz(v));
    return out;
}

/// Coefficient vector of an element of Z[x] (index = exponent).
inline oracle::Dense to_dense(const RingElement& p)
{
    oracle::Dense out;
    for (const auto& m : divseq::to_monomials(p.poly())) {
        const auto e = m.exponents.at(0);
        if (out.coeffs.size() <= e)
            out.coeffs.resize(e + 1, 0);
        out.coeffs[e] = m.coeff.get_si();
    }
    return out;
}

/// Random nonzero elements: integers in [-bound, bound], or polynomials
/// with coefficients in [-9, 9] and degree <= max_degree in each variable.
class RandomElements {
public:
    explicit RandomElements(std::uint64_t seed) : rng_(seed) {}

    RingElement integer(long long bound)
    {
        std::uniform_int_distribution<long long> dist(-bound, bound);
        long long v = 0;
        while (v == 0)
            v = dist(rng_);
        return zz(v);
    }

    RingElement polynomial(const Ring& ring, unsigned max_degree)
    {
        std::uniform_int_distribution<int> coeff(-9, 9);
        std::uniform_int_distribution<unsigned> degree(0, max_degree);
        std::bernoulli_distribution keep(0.6);
        for (;;) {
            std::vector<divseq::Monomial> monomials;
            std::vector<unsigned> tops(ring.num_variables());
            for (auto& t : tops)
                t = degree(rng_);
            enumerate(tops, 0, {}, [&](const std::vector<divseq::Poly::Exponent>& exps) {
                if (keep(rng_))
                    monomials.push_back({exps, Integer(coeff(rng_))});
            });
            auto p = divseq::from_monomials(ring.num_variables(), std::move(monomials));
            if (!p.is_zero())
                return RingElement(ring, p);
        }
    }

    std::mt19937_64& engine() { return rng_; }

private:
    template <typename F>
    static void enumerate(const std::vector<unsigned>& tops, std::size_t level,
                          std::vector<divseq::Poly::Exponent> prefix, F&& visit)
    {
        if (level == tops.size()) {
            visit(prefix);
            return;
        }
        for (unsigned e = 0; e <= tops[level]; ++e) {
            prefix.push_back(e);
            enumerate(tops, level + 1, prefix, visit);
            prefix.pop_back();
        }
    }

    std::mt19937_64 rng_;
};

} // namespace testing
