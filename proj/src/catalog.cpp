#include "divseq/catalog.hpp"

#include <algorithm>
#include <numeric>

#include "divseq/numtheory.hpp"

namespace divseq {

std::string_view to_string(Expectation e)
{
    switch (e) {
    case Expectation::strong:
        return "strong";
    case Expectation::not_strong:
        return "not_strong";
    case Expectation::unknown:
        break;
    }
    return "unknown";
}

const Ring& ring_x()
{
    static const Ring ring({"x"});
    return ring;
}

const Ring& ring_xy()
{
    static const Ring ring({"x", "y"});
    return ring;
}

const Ring& ring_xyz()
{
    static const Ring ring({"x", "y", "z"});
    return ring;
}

const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> entries = [] {
        const Ring zz = Ring::integers();
        using E = Expectation;
        return std::vector<CatalogEntry>{
            {"xn_minus_1", {}, ring_x(), E::strong, "x^n - 1; lcm quotients are the cyclotomic polynomials"},
            {"bn_minus_1", {{"b", 2, "base, b >= 2"}}, zz, E::strong, "b^n - 1; lcm quotients are Phi_n(b)"},
            {"mersenne", {}, zz, E::strong, "2^n - 1"},
            {"xn_minus_yn", {}, ring_xy(), E::strong, "x^n - y^n; lcm quotients are Psi_n(x,y)"},
            {"un_vn",
             {{"u", 3, "u > v"}, {"v", 2, "v >= 1, gcd(u,v) = 1"}},
             zz,
             E::strong,
             "u^n - v^n; lcm quotients are Psi_n(u,v)"},
            {"repunit", {}, zz, E::strong, "(10^n - 1)/9"},
            {"fibonacci", {}, zz, E::strong, "F_1 = F_2 = 1, F_{n+2} = F_{n+1} + F_n"},
            {"fibonacci_poly", {}, ring_x(), E::strong, "F_1 = 1, F_2 = x, F_{n+2} = x F_{n+1} + F_n"},
            {"chebyshev_u", {}, ring_x(), E::strong, "a_n = U_{n-1}; U_0 = 1, U_1 = 2x, U_{n+2} = 2x U_{n+1} - U_n"},
            {"s3_poly",
             {},
             ring_xyz(),
             E::strong,
             "S_1 = 1, S_2 = x, S_n = x S_{n-1} + y S_{n-2} (n even), z S_{n-1} + y S_{n-2} (n odd)"},
            {"triangular", {}, zz, E::not_strong, "n(n+1)/2; negative control"},
            {"factorial", {}, zz, E::not_strong, "n!; lcm quotients are n, but gcd(2!,3!) = 2 while a_1 = 1"},
            {"geometric",
             {{"q", 2, "ratio, nonzero"}},
             zz,
             E::not_strong,
             "q^n; lcm quotients are q; strong only when q is a unit"},
            {"constant", {{"a", 5, "value, nonzero"}}, zz, E::strong, "a, a, a, ...; lcm quotients a, 1, 1, ..."},
            {"natural", {}, zz, E::strong, "n; lcm quotient is p at prime powers p^s, 1 elsewhere"},
        };
    }();
    return entries;
}

const CatalogEntry& catalog_entry(std::string_view name)
{
    const auto& entries = catalog();
    auto it = std::find_if(entries.begin(), entries.end(), [&](const CatalogEntry& e) { return e.name == name; });
    if (it != entries.end())
        return *it;
    std::string known;
    for (const auto& e : entries)
        known += (known.empty() ? "" : ", ") + e.name;
    throw UsageError("unknown sequence '" + std::string(name) + "'; known sequences: " + known);
}

namespace {

Integer power(long long base, std::size_t exponent)
{
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), Integer(static_cast<long>(base)).get_mpz_t(), exponent);
    return out;
}

template <typename F>
TermGenerator integer_terms(F term)
{
    return [term](std::size_t count) {
        std::vector<RingElement> out;
        out.reserve(count);
        for (std::size_t n = 1; n <= count; ++n)
            out.emplace_back(Ring::integers(), term(n));
        return out;
    };
}

/// a_1 = first, a_2 = second, a_n = step(n, a_{n-1}, a_{n-2}).
template <typename F>
TermGenerator recurrence(RingElement first, RingElement second, F step)
{
    return [=](std::size_t count) {
        std::vector<RingElement> out{first, second};
        for (std::size_t n = 3; n <= count; ++n)
            out.push_back(step(n, out[n - 2], out[n - 3]));
        out.resize(count);
        return out;
    };
}

TermGenerator make_generator(const std::string& name, const ParamMap& p)
{
    if (name == "xn_minus_1")
        return [](std::size_t count) {
            const RingElement x = RingElement::variable(ring_x(), "x");
            const RingElement one = RingElement::one(ring_x());
            std::vector<RingElement> out;
            for (std::size_t n = 1; n <= count; ++n)
                out.push_back(pow(x, n) - one);
            return out;
        };
    if (name == "bn_minus_1" || name == "mersenne") {
        const long long b = name == "mersenne" ? 2 : p.at("b");
        return integer_terms([b](std::size_t n) -> Integer { return Integer(power(b, n) - 1); });
    }
    if (name == "xn_minus_yn")
        return [](std::size_t count) {
            const RingElement x = RingElement::variable(ring_xy(), "x");
            const RingElement y = RingElement::variable(ring_xy(), "y");
            std::vector<RingElement> out;
            for (std::size_t n = 1; n <= count; ++n)
                out.push_back(pow(x, n) - pow(y, n));
            return out;
        };
    if (name == "un_vn") {
        const long long u = p.at("u");
        const long long v = p.at("v");
        return integer_terms([u, v](std::size_t n) -> Integer { return Integer(power(u, n) - power(v, n)); });
    }
    if (name == "repunit")
        return integer_terms([](std::size_t n) -> Integer { return Integer((power(10, n) - 1) / 9); });
    if (name == "fibonacci") {
        const Ring zz;
        return recurrence(RingElement(zz, Integer(1)), RingElement(zz, Integer(1)),
                          [](std::size_t, const RingElement& a1, const RingElement& a2) { return a1 + a2; });
    }
    if (name == "fibonacci_poly") {
        const RingElement x = RingElement::variable(ring_x(), "x");
        return recurrence(RingElement::one(ring_x()), x,
                          [x](std::size_t, const RingElement& a1, const RingElement& a2) { return x * a1 + a2; });
    }
    if (name == "chebyshev_u") {
        const RingElement two_x = RingElement(ring_x(), Integer(2)) * RingElement::variable(ring_x(), "x");
        return recurrence(RingElement::one(ring_x()), two_x,
                          [two_x](std::size_t, const RingElement& a1, const RingElement& a2) {
                              return two_x * a1 - a2;
                          });
    }
    if (name == "s3_poly") {
        const RingElement x = RingElement::variable(ring_xyz(), "x");
        const RingElement y = RingElement::variable(ring_xyz(), "y");
        const RingElement z = RingElement::variable(ring_xyz(), "z");
        return recurrence(RingElement::one(ring_xyz()), x,
                          [x, y, z](std::size_t n, const RingElement& a1, const RingElement& a2) {
                              return (n % 2 == 0 ? x : z) * a1 + y * a2;
                          });
    }
    if (name == "triangular")
        return integer_terms([](std::size_t n) -> Integer { return Integer(n) * Integer(n + 1) / 2; });
    if (name == "factorial")
        return integer_terms([](std::size_t n) -> Integer {
            Integer f;
            mpz_fac_ui(f.get_mpz_t(), n);
            return f;
        });
    if (name == "geometric") {
        const long long q = p.at("q");
        return integer_terms([q](std::size_t n) -> Integer { return power(q, n); });
    }
    if (name == "constant") {
        const long long a = p.at("a");
        return integer_terms([a](std::size_t) -> Integer { return Integer(static_cast<long>(a)); });
    }
    if (name == "natural")
        return integer_terms([](std::size_t n) -> Integer { return Integer(n); });
    throw InternalError("catalog entry '" + name + "' has no generator");
}

void validate(const std::string& name, const ParamMap& p)
{
    if (name == "bn_minus_1" && p.at("b") < 2)
        throw UsageError("bn_minus_1 needs b >= 2");
    if (name == "un_vn") {
        const long long u = p.at("u");
        const long long v = p.at("v");
        if (!(u > v && v >= 1))
            throw UsageError("un_vn needs u > v >= 1");
        if (std::gcd(u, v) != 1)
            throw UsageError("un_vn needs relatively prime u and v");
    }
    if (name == "geometric" && p.at("q") == 0)
        throw UsageError("geometric needs a nonzero ratio q");
    if (name == "constant" && p.at("a") == 0)
        throw UsageError("constant needs a nonzero value a");
}

} // namespace

SequenceSpec builtin(std::string_view name, const ParamMap& params)
{
    const CatalogEntry& entry = catalog_entry(name);
    ParamMap resolved;
    for (const auto& param : entry.params)
        resolved[param.name] = param.default_value;
    for (const auto& [key, value] : params) {
        if (!resolved.count(key))
            throw UsageError("sequence '" + entry.name + "' has no parameter '" + key + "'");
        resolved[key] = value;
    }
    validate(entry.name, resolved);
    return SequenceSpec::generated(entry.name, resolved, entry.ring, make_generator(entry.name, resolved));
}

std::vector<RingElement> cyclotomic_phis(std::size_t count)
{
    if (count == 0)
        throw UsageError("cyclotomic index must be positive");
    return lcm_sequence(builtin("xn_minus_1"), count).c;
}

RingElement cyclotomic_phi(std::size_t n)
{
    return cyclotomic_phis(n).back();
}

Integer cyclotomic_phi_at(std::size_t n, long long b)
{
    if (n == 0)
        throw UsageError("cyclotomic index must be positive");
    if (b < 2)
        throw UsageError("cyclotomic evaluation point must be >= 2");
    return lcm_sequence(builtin("bn_minus_1", {{"b", b}}), n).c.back().to_integer();
}

RingElement psi(std::size_t n)
{
    if (n == 0)
        throw UsageError("psi index must be positive");
    const RingElement x = RingElement::variable(ring_xy(), "x");
    const RingElement y = RingElement::variable(ring_xy(), "y");
    RingElement numerator = RingElement::one(ring_xy());
    RingElement denominator = RingElement::one(ring_xy());
    for (auto d : divisors(n)) {
        const int mu = mobius(n / d);
        if (mu > 0)
            numerator = numerator * (pow(x, d) - pow(y, d));
        else if (mu < 0)
            denominator = denominator * (pow(x, d) - pow(y, d));
    }
    return canonical(exact_div(numerator, denominator));
}

} // namespace divseq
