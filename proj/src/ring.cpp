#include "divseq/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "divseq/text.hpp"

namespace divseq {

namespace {

bool valid_identifier(const std::string& name)
{
    if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
        return false;
    return std::all_of(name.begin(), name.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

void check_same_ring(const RingElement& a, const RingElement& b)
{
    if (!(a.ring() == b.ring()))
        throw DomainError("ring mismatch");
}

void check_operands(const RingElement& a, const RingElement& b)
{
    check_same_ring(a, b);
    if (a.is_zero() || b.is_zero())
        throw DomainError("zero element");
}

std::string trim(std::string_view s)
{
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string_view::npos)
        return {};
    auto end = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(begin, end - begin + 1));
}

} // namespace

Ring::Ring(std::vector<std::string> variables)
{
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (!valid_identifier(v))
            throw DomainError("invalid variable name '" + v + "'");
        if (!seen.insert(v).second)
            throw DomainError("duplicate variable '" + v + "'");
    }
    if (!variables.empty())
        vars_ = std::make_shared<const std::vector<std::string>>(std::move(variables));
}

Ring Ring::parse(std::string_view signature)
{
    std::string s = trim(signature);
    if (s.empty() || s == "ZZ" || s == "Z")
        return Ring();
    if (s.rfind("ZZ[", 0) == 0 && s.back() == ']')
        s = s.substr(3, s.size() - 4);
    std::vector<std::string> vars;
    std::size_t start = 0;
    for (;;) {
        const auto comma = s.find(',', start);
        vars.push_back(trim(std::string_view(s).substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return Ring(std::move(vars));
}

const std::vector<std::string>& Ring::variables() const
{
    static const std::vector<std::string> none;
    return vars_ ? *vars_ : none;
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const
{
    const auto& vars = variables();
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - vars.begin());
}

std::string Ring::name() const
{
    if (is_integer())
        return "ZZ";
    std::string out = "ZZ[";
    for (std::size_t i = 0; i < variables().size(); ++i) {
        if (i)
            out += ',';
        out += variables()[i];
    }
    return out + ']';
}

RingElement::RingElement(Ring ring, Poly value) : ring_(std::move(ring)), value_(std::move(value))
{
    if (value_.depth() != ring_.num_variables())
        throw InternalError("polynomial depth does not match ring " + ring_.name());
}

RingElement::RingElement(Ring ring, const Integer& value)
    : RingElement(ring, Poly::constant(ring.num_variables(), value))
{
}

RingElement RingElement::variable(const Ring& ring, std::string_view name)
{
    auto index = ring.index_of(name);
    if (!index)
        throw DomainError("unknown variable '" + std::string(name) + "' in " + ring.name());
    return {ring, Poly::variable(ring.num_variables(), *index)};
}

RingElement RingElement::parse(const Ring& ring, std::string_view text)
{
    return {ring, parse_poly(text, ring.variables())};
}

std::string RingElement::str() const
{
    return format_poly(value_, ring_.variables());
}

RingElement operator+(const RingElement& a, const RingElement& b)
{
    check_same_ring(a, b);
    return {a.ring_, a.value_ + b.value_};
}

RingElement operator-(const RingElement& a, const RingElement& b)
{
    check_same_ring(a, b);
    return {a.ring_, a.value_ - b.value_};
}

RingElement operator*(const RingElement& a, const RingElement& b)
{
    check_same_ring(a, b);
    return {a.ring_, a.value_ * b.value_};
}

InexactDivision::InexactDivision(RingElement dividend, RingElement divisor, RingElement remainder)
    : Error("inexact division of " + dividend.str() + " by " + divisor.str() + ", remainder " + remainder.str()),
      dividend_(std::move(dividend)),
      divisor_(std::move(divisor)),
      remainder_(std::move(remainder))
{
}

RingElement pow(const RingElement& base, std::uint64_t exponent)
{
    return {base.ring(), pow(base.poly(), exponent)};
}

RingElement gcd(const RingElement& a, const RingElement& b)
{
    check_operands(a, b);
    return {a.ring(), gcd(a.poly(), b.poly())};
}

RingElement lcm(const RingElement& a, const RingElement& b)
{
    check_operands(a, b);
    const Poly g = gcd(a.poly(), b.poly());
    DivisionResult cofactor = divide(b.poly(), g);
    if (!cofactor.exact())
        throw InternalError("gcd does not divide its argument");
    return {a.ring(), canonical(a.poly() * cofactor.quotient)};
}

RingElement gcd_many(std::span<const RingElement> elems)
{
    if (elems.empty())
        throw UsageError("gcd of an empty list");
    RingElement acc = canonical(elems.front());
    for (const auto& e : elems.subspan(1))
        acc = gcd(acc, e);
    return acc;
}

RingElement lcm_many(std::span<const RingElement> elems)
{
    if (elems.empty())
        throw UsageError("lcm of an empty list");
    RingElement acc = canonical(elems.front());
    for (const auto& e : elems.subspan(1))
        acc = lcm(acc, e);
    return acc;
}

std::optional<RingElement> try_exact_div(const RingElement& a, const RingElement& b)
{
    check_operands(a, b);
    DivisionResult r = divide(a.poly(), b.poly());
    if (!r.exact())
        return std::nullopt;
    return RingElement(a.ring(), std::move(r.quotient));
}

RingElement exact_div(const RingElement& a, const RingElement& b)
{
    check_operands(a, b);
    DivisionResult r = divide(a.poly(), b.poly());
    if (!r.exact())
        throw InexactDivision(a, b, RingElement(a.ring(), std::move(r.remainder)));
    return {a.ring(), std::move(r.quotient)};
}

bool divides(const RingElement& d, const RingElement& a)
{
    check_operands(d, a);
    return divide(a.poly(), d.poly()).exact();
}

UnitAndCanonical normalize(const RingElement& a)
{
    if (a.is_zero())
        throw DomainError("zero element");
    const int s = a.poly().sign();
    return {s < 0 ? -a : a, RingElement(a.ring(), Integer(s))};
}

RingElement canonical(const RingElement& a)
{
    return normalize(a).canonical;
}

bool is_associate(const RingElement& a, const RingElement& b)
{
    check_operands(a, b);
    return canonical(a.poly()) == canonical(b.poly());
}

bool coprime(const RingElement& a, const RingElement& b)
{
    return gcd(a, b).is_unit();
}

RingElement eval(const RingElement& p, const std::map<std::string, RingElement>& assignment)
{
    const Ring& source = p.ring();
    for (const auto& [name, value] : assignment)
        if (!source.index_of(name))
            throw DomainError("variable '" + name + "' is not in " + source.name());

    std::optional<Ring> target;
    for (const auto& [name, value] : assignment) {
        if (value.ring().is_integer())
            continue;
        if (target && !(*target == value.ring()))
            throw DomainError("ring mismatch");
        target = value.ring();
    }
    const Ring out = target.value_or(Ring::integers());

    std::vector<Poly> values;
    values.reserve(source.num_variables());
    for (const auto& name : source.variables()) {
        auto it = assignment.find(name);
        if (it == assignment.end())
            throw DomainError("missing value for variable '" + name + "'");
        if (it->second.ring().is_integer())
            values.push_back(Poly::constant(out.num_variables(), it->second.to_integer()));
        else
            values.push_back(it->second.poly());
    }
    if (source.is_integer())
        return RingElement(out, p.to_integer());
    return {out, substitute(p.poly(), values)};
}

RingElement reorder(const RingElement& p, const Ring& target)
{
    const auto& from = p.ring().variables();
    if (from.size() != target.num_variables())
        throw DomainError("ring mismatch");
    std::vector<std::size_t> permutation(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) {
        auto index = target.index_of(from[i]);
        if (!index)
            throw DomainError("ring mismatch");
        permutation[i] = *index;
    }
    return {target, permute_variables(p.poly(), permutation)};
}

} // namespace divseq
