#pragma once

// The eight elementary gcd/lcm laws of a gcd-domain, checked on one random
// triple as associate-equalities. Clauses 5-8 are implications; each is
// checked on the raw triple when its premise happens to hold, and on a
// witness triple built so that the premise holds.

#include <string>
#include <vector>

#include "divseq/ring.hpp"

namespace testing {

inline divseq::RingElement coprime_part(divseq::RingElement x, const divseq::RingElement& a)
{
    for (;;) {
        const auto g = divseq::gcd(x, a);
        if (g.is_unit())
            return x;
        x = divseq::exact_div(x, g);
    }
}

/// Empty on success, otherwise what failed.
inline std::string check_gcd_law(int clause, const divseq::RingElement& a, const divseq::RingElement& b,
                                 const divseq::RingElement& c)
{
    using namespace divseq;
    auto same = [](const RingElement& l, const RingElement& r) { return is_associate(l, r); };
    switch (clause) {
    case 1: {
        const std::vector<RingElement> all{a, b, c};
        if (!same(gcd(gcd(a, b), c), gcd(a, gcd(b, c))) || !same(gcd(a, gcd(b, c)), gcd_many(all)))
            return "gcd associativity";
        if (!same(lcm(lcm(a, b), c), lcm(a, lcm(b, c))) || !same(lcm(a, lcm(b, c)), lcm_many(all)))
            return "lcm associativity";
        return {};
    }
    case 2:
        if (!same(gcd(a * c, b * c), gcd(a, b) * c))
            return "(ac,bc) != (a,b)c";
        if (!same(lcm(a * c, b * c), lcm(a, b) * c))
            return "[ac,bc] != [a,b]c";
        return {};
    case 3:
        if (!same(gcd(a, b) * lcm(a, b), a * b))
            return "(a,b)[a,b] != ab";
        return {};
    case 4: {
        const auto d = gcd(a, b);
        if (!gcd(exact_div(a, d), exact_div(b, d)).is_unit())
            return "(a/d,b/d) != 1";
        return {};
    }
    case 5: {
        if (coprime(a, b) && coprime(a, c) && !coprime(a, b * c))
            return "raw triple: (a,b)=(a,c)=1 but (a,bc)!=1";
        const auto b1 = coprime_part(b, a);
        const auto c1 = coprime_part(c, a);
        if (!coprime(a, b1) || !coprime(a, c1) || !coprime(a, b1 * c1))
            return "witness: (a,b)=(a,c)=1 but (a,bc)!=1";
        return {};
    }
    case 6: {
        if (coprime(a, b * c) && !(coprime(a, b) && coprime(a, c)))
            return "raw triple: (a,bc)=1 but a factor is not coprime";
        const auto b1 = coprime_part(b, a);
        const auto c1 = coprime_part(c, a);
        if (coprime(a, b1 * c1) && !(coprime(a, b1) && coprime(a, c1)))
            return "witness: (a,bc)=1 but a factor is not coprime";
        return {};
    }
    case 7: {
        if (coprime(a, b) && divides(a, b * c) && !divides(a, c))
            return "raw triple: (a,b)=1, a|bc but a does not divide c";
        const auto b1 = coprime_part(b, a);
        const auto c1 = a * c;
        if (!divides(a, b1 * c1) || !divides(a, c1))
            return "witness: (a,b)=1, a|bc but a does not divide c";
        return {};
    }
    case 8: {
        if (coprime(a, b) && divides(a, c) && divides(b, c) && !divides(a * b, c))
            return "raw triple: (a,b)=1, a|c, b|c but ab does not divide c";
        const auto b1 = coprime_part(b, a);
        const auto c1 = lcm(a, b1) * c;
        if (!divides(a, c1) || !divides(b1, c1) || !divides(a * b1, c1))
            return "witness: (a,b)=1, a|c, b|c but ab does not divide c";
        return {};
    }
    default:
        return "no such clause";
    }
}

} // namespace testing
