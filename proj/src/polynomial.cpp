#include "divseq/polynomial.hpp"

#include <algorithm>
#include <map>

#include "divseq/errors.hpp"

namespace divseq {

namespace {

void require_same_depth(const Poly& a, const Poly& b)
{
    if (a.depth() != b.depth())
        throw InternalError("polynomial depth mismatch");
}

// Dense coefficient buffers indexed by exponent, used by the division
// routines. Depth-1 polynomials get a flat Integer buffer so the inner
// loops reduce to mpz_submul.
std::vector<Integer> dense_integers(const Poly& p)
{
    std::vector<Integer> out(p.is_zero() ? 1 : p.degree() + 1);
    for (std::size_t i = 0; i < p.size(); ++i)
        out[p.exponent(i)] = p.coeff(i).value();
    return out;
}

Poly from_dense_integers(const std::vector<Integer>& buf, std::size_t count)
{
    std::vector<std::pair<Poly::Exponent, Poly>> terms;
    for (std::size_t k = count; k-- > 0;)
        if (buf[k] != 0)
            terms.emplace_back(static_cast<Poly::Exponent>(k), Poly(buf[k]));
    return Poly::from_terms(1, std::move(terms));
}

std::vector<Poly> dense_polys(const Poly& p)
{
    std::vector<Poly> out(p.is_zero() ? 1 : p.degree() + 1, Poly::zero(p.depth() - 1));
    for (std::size_t i = 0; i < p.size(); ++i)
        out[p.exponent(i)] = p.coeff(i);
    return out;
}

Poly from_dense_polys(std::size_t depth, const std::vector<Poly>& buf, std::size_t count)
{
    std::vector<std::pair<Poly::Exponent, Poly>> terms;
    for (std::size_t k = count; k-- > 0;)
        if (!buf[k].is_zero())
            terms.emplace_back(static_cast<Poly::Exponent>(k), buf[k]);
    return Poly::from_terms(depth, std::move(terms));
}

Poly combine(const Poly& a, const Poly& b, bool subtract)
{
    require_same_depth(a, b);
    if (a.depth() == 0)
        return Poly(subtract ? Integer(a.value() - b.value()) : Integer(a.value() + b.value()));

    std::vector<std::pair<Poly::Exponent, Poly>> terms;
    terms.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a.exponent(i) > b.exponent(j))) {
            terms.emplace_back(a.exponent(i), a.coeff(i));
            ++i;
        } else if (i == a.size() || b.exponent(j) > a.exponent(i)) {
            terms.emplace_back(b.exponent(j), subtract ? -b.coeff(j) : b.coeff(j));
            ++j;
        } else {
            Poly c = combine(a.coeff(i), b.coeff(j), subtract);
            if (!c.is_zero())
                terms.emplace_back(a.exponent(i), std::move(c));
            ++i;
            ++j;
        }
    }
    return Poly::from_terms(a.depth(), std::move(terms));
}

} // namespace

Poly Poly::zero(std::size_t depth)
{
    Poly p;
    p.depth_ = depth;
    return p;
}

Poly Poly::constant(std::size_t depth, const Integer& value)
{
    if (depth == 0)
        return Poly(value);
    if (value == 0)
        return zero(depth);
    return term(depth, 0, constant(depth - 1, value));
}

Poly Poly::variable(std::size_t depth, std::size_t index)
{
    if (index >= depth)
        throw InternalError("variable index out of range");
    if (index == 0)
        return term(depth, 1, constant(depth - 1, 1));
    return term(depth, 0, variable(depth - 1, index - 1));
}

Poly Poly::term(std::size_t depth, Exponent exponent, Poly coeff)
{
    if (depth == 0 || coeff.depth() + 1 != depth)
        throw InternalError("term coefficient has wrong depth");
    Poly p = zero(depth);
    if (!coeff.is_zero()) {
        p.exps_.push_back(exponent);
        p.coeffs_.push_back(std::move(coeff));
    }
    return p;
}

Poly Poly::from_terms(std::size_t depth, std::vector<std::pair<Exponent, Poly>> terms)
{
    if (depth == 0)
        throw InternalError("from_terms requires a positive depth");
    std::stable_sort(terms.begin(), terms.end(),
                     [](const auto& l, const auto& r) { return l.first > r.first; });
    Poly p = zero(depth);
    for (auto& [e, c] : terms) {
        if (c.depth() + 1 != depth)
            throw InternalError("term coefficient has wrong depth");
        if (!p.exps_.empty() && p.exps_.back() == e) {
            p.coeffs_.back() = p.coeffs_.back() + c;
            if (p.coeffs_.back().is_zero()) {
                p.coeffs_.pop_back();
                p.exps_.pop_back();
            }
        } else if (!c.is_zero()) {
            p.exps_.push_back(e);
            p.coeffs_.push_back(std::move(c));
        }
    }
    return p;
}

bool Poly::is_constant() const
{
    if (depth_ == 0 || coeffs_.empty())
        return true;
    return coeffs_.size() == 1 && exps_[0] == 0 && coeffs_[0].is_constant();
}

Integer Poly::constant_value() const
{
    if (depth_ == 0)
        return value_;
    if (coeffs_.empty())
        return 0;
    if (!is_constant())
        throw InternalError("constant_value of a non-constant polynomial");
    return coeffs_[0].constant_value();
}

Poly Poly::coeff_of(Exponent e) const
{
    auto it = std::lower_bound(exps_.begin(), exps_.end(), e, std::greater<>());
    if (it != exps_.end() && *it == e)
        return coeffs_[static_cast<std::size_t>(it - exps_.begin())];
    return zero(depth_ - 1);
}

const Integer& Poly::base_leading() const
{
    if (depth_ == 0 || coeffs_.empty())
        return value_;
    return coeffs_.front().base_leading();
}

int Poly::sign() const
{
    return sgn(base_leading());
}

std::uint64_t Poly::total_degree() const
{
    std::uint64_t best = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        best = std::max<std::uint64_t>(best, exps_[i] + coeffs_[i].total_degree());
    return best;
}

Poly::Exponent Poly::degree_in(std::size_t index) const
{
    if (index >= depth_)
        throw InternalError("variable index out of range");
    if (index == 0)
        return degree();
    Exponent best = 0;
    for (const auto& c : coeffs_)
        best = std::max(best, c.degree_in(index - 1));
    return best;
}

Poly Poly::operator-() const
{
    Poly p = *this;
    if (depth_ == 0)
        p.value_ = -value_;
    else
        for (auto& c : p.coeffs_)
            c = -c;
    return p;
}

Poly operator+(const Poly& a, const Poly& b)
{
    return combine(a, b, false);
}

Poly operator-(const Poly& a, const Poly& b)
{
    return combine(a, b, true);
}

Poly operator*(const Poly& a, const Poly& b)
{
    require_same_depth(a, b);
    const std::size_t depth = a.depth();
    if (depth == 0)
        return Poly(Integer(a.value() * b.value()));
    if (a.is_zero() || b.is_zero())
        return Poly::zero(depth);

    const std::uint64_t span = std::uint64_t(a.degree()) + b.degree() + 1;
    const std::uint64_t work = std::uint64_t(a.size()) * b.size();
    if (depth == 1 && span <= 4 * work + 64) {
        std::vector<Integer> acc(span);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                mpz_addmul(acc[a.exponent(i) + b.exponent(j)].get_mpz_t(),
                           a.coeff(i).value().get_mpz_t(), b.coeff(j).value().get_mpz_t());
        return from_dense_integers(acc, span);
    }
    if (span <= 4 * work + 64) {
        std::vector<Poly> acc(span, Poly::zero(depth - 1));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) {
                auto& slot = acc[a.exponent(i) + b.exponent(j)];
                slot = slot + a.coeff(i) * b.coeff(j);
            }
        return from_dense_polys(depth, acc, span);
    }
    std::map<Poly::Exponent, Poly, std::greater<>> acc;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            auto [it, inserted] = acc.try_emplace(a.exponent(i) + b.exponent(j), Poly::zero(depth - 1));
            it->second = it->second + a.coeff(i) * b.coeff(j);
        }
    std::vector<std::pair<Poly::Exponent, Poly>> terms(acc.begin(), acc.end());
    return Poly::from_terms(depth, std::move(terms));
}

bool operator==(const Poly& a, const Poly& b)
{
    return a.depth_ == b.depth_ && a.value_ == b.value_ && a.exps_ == b.exps_ && a.coeffs_ == b.coeffs_;
}

Poly Poly::scale(const Poly& c) const
{
    return mul_term(0, c);
}

Poly Poly::mul_term(Exponent shift, const Poly& c) const
{
    if (depth_ == 0 || c.depth() + 1 != depth_)
        throw InternalError("mul_term coefficient has wrong depth");
    if (c.is_zero())
        return zero(depth_);
    Poly p = zero(depth_);
    p.exps_.reserve(exps_.size());
    p.coeffs_.reserve(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        p.exps_.push_back(exps_[i] + shift);
        p.coeffs_.push_back(coeffs_[i] * c);
    }
    return p;
}

Poly pow(const Poly& base, std::uint64_t exponent)
{
    Poly result = Poly::constant(base.depth(), 1);
    Poly square = base;
    while (exponent > 0) {
        if (exponent & 1U)
            result = result * square;
        exponent >>= 1U;
        if (exponent > 0)
            square = square * square;
    }
    return result;
}

DivisionResult divide(const Poly& a, const Poly& b)
{
    require_same_depth(a, b);
    if (b.is_zero())
        throw InternalError("division by zero polynomial");
    const std::size_t depth = a.depth();
    if (depth == 0) {
        Integer q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.value().get_mpz_t(), b.value().get_mpz_t());
        return {Poly(q), Poly(r)};
    }
    if (a.is_zero())
        return {Poly::zero(depth), Poly::zero(depth)};
    if (a.degree() < b.degree())
        return {Poly::zero(depth), a};

    const std::size_t degb = b.degree();
    std::vector<std::pair<Poly::Exponent, Poly>> quotient;

    if (depth == 1) {
        auto rd = dense_integers(a);
        const Integer& lcb = b.leading().value();
        Integer qc, rem;
        for (std::size_t k = a.degree() + 1; k-- > degb;) {
            if (rd[k] == 0)
                continue;
            mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), rd[k].get_mpz_t(), lcb.get_mpz_t());
            if (rem != 0)
                return {Poly::from_terms(1, std::move(quotient)), from_dense_integers(rd, k + 1)};
            rd[k] = 0;
            for (std::size_t j = 1; j < b.size(); ++j)
                mpz_submul(rd[k - degb + b.exponent(j)].get_mpz_t(), qc.get_mpz_t(),
                           b.coeff(j).value().get_mpz_t());
            quotient.emplace_back(static_cast<Poly::Exponent>(k - degb), Poly(qc));
        }
        return {Poly::from_terms(1, std::move(quotient)), from_dense_integers(rd, degb)};
    }

    auto rd = dense_polys(a);
    const Poly& lcb = b.leading();
    for (std::size_t k = a.degree() + 1; k-- > degb;) {
        if (rd[k].is_zero())
            continue;
        DivisionResult step = divide(rd[k], lcb);
        if (!step.exact())
            return {Poly::from_terms(depth, std::move(quotient)), from_dense_polys(depth, rd, k + 1)};
        rd[k] = Poly::zero(depth - 1);
        for (std::size_t j = 1; j < b.size(); ++j) {
            auto& slot = rd[k - degb + b.exponent(j)];
            slot = slot - step.quotient * b.coeff(j);
        }
        quotient.emplace_back(static_cast<Poly::Exponent>(k - degb), std::move(step.quotient));
    }
    return {Poly::from_terms(depth, std::move(quotient)), from_dense_polys(depth, rd, degb)};
}

Poly divide_coefficients(const Poly& p, const Poly& c)
{
    if (p.depth() == 0 || c.depth() + 1 != p.depth())
        throw InternalError("divide_coefficients depth mismatch");
    if (is_unit(c))
        return c.sign() > 0 ? p : -p;
    std::vector<std::pair<Poly::Exponent, Poly>> terms;
    terms.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        DivisionResult r = divide(p.coeff(i), c);
        if (!r.exact())
            throw InternalError("inexact coefficient division");
        terms.emplace_back(p.exponent(i), std::move(r.quotient));
    }
    return Poly::from_terms(p.depth(), std::move(terms));
}

Poly pseudo_remainder(const Poly& a, const Poly& b)
{
    require_same_depth(a, b);
    const std::size_t depth = a.depth();
    if (depth == 0 || b.is_zero())
        throw InternalError("pseudo_remainder requires nonzero polynomials");
    if (a.is_zero() || a.degree() < b.degree())
        return a;

    const std::size_t degb = b.degree();
    if (depth == 1) {
        auto rd = dense_integers(a);
        const Integer& lcb = b.leading().value();
        const bool unit = (lcb == 1 || lcb == -1);
        for (std::size_t k = a.degree() + 1; k-- > degb;) {
            Integer c = std::move(rd[k]);
            rd[k] = 0;
            if (!unit) {
                for (std::size_t i = 0; i < k; ++i)
                    if (rd[i] != 0)
                        rd[i] *= lcb;
            } else if (lcb < 0) {
                for (std::size_t i = 0; i < k; ++i)
                    rd[i] = -rd[i];
            }
            if (c == 0)
                continue;
            for (std::size_t j = 1; j < b.size(); ++j)
                mpz_submul(rd[k - degb + b.exponent(j)].get_mpz_t(), c.get_mpz_t(),
                           b.coeff(j).value().get_mpz_t());
        }
        return from_dense_integers(rd, degb);
    }

    auto rd = dense_polys(a);
    const Poly& lcb = b.leading();
    const bool one = is_unit(lcb) && lcb.sign() > 0;
    for (std::size_t k = a.degree() + 1; k-- > degb;) {
        Poly c = std::move(rd[k]);
        rd[k] = Poly::zero(depth - 1);
        if (!one)
            for (std::size_t i = 0; i < k; ++i)
                if (!rd[i].is_zero())
                    rd[i] = rd[i] * lcb;
        if (c.is_zero())
            continue;
        for (std::size_t j = 1; j < b.size(); ++j) {
            auto& slot = rd[k - degb + b.exponent(j)];
            slot = slot - c * b.coeff(j);
        }
    }
    return from_dense_polys(depth, rd, degb);
}

Poly canonical(const Poly& p)
{
    return p.sign() < 0 ? -p : p;
}

bool is_unit(const Poly& p)
{
    if (!p.is_constant())
        return false;
    Integer v = p.constant_value();
    return v == 1 || v == -1;
}

Poly content(const Poly& p)
{
    if (p.depth() == 0 || p.is_zero())
        throw InternalError("content requires a nonzero polynomial of positive depth");
    Poly g = canonical(p.coeff(0));
    for (std::size_t i = 1; i < p.size() && !is_unit(g); ++i)
        g = gcd(g, p.coeff(i));
    return g;
}

Poly primitive_part(const Poly& p)
{
    return divide_coefficients(p, content(p));
}

Poly gcd(const Poly& a, const Poly& b)
{
    require_same_depth(a, b);
    if (a.is_zero() && b.is_zero())
        throw InternalError("gcd of two zeros");
    if (a.is_zero())
        return canonical(b);
    if (b.is_zero())
        return canonical(a);
    const std::size_t depth = a.depth();
    if (depth == 0) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), a.value().get_mpz_t(), b.value().get_mpz_t());
        return Poly(std::move(g));
    }

    const Poly ca = content(a);
    const Poly cb = content(b);
    const Poly d = gcd(ca, cb);
    Poly u = divide_coefficients(a, ca);
    Poly v = divide_coefficients(b, cb);
    if (u.degree() < v.degree())
        std::swap(u, v);
    // A primitive polynomial of degree 0 is a unit.
    if (v.degree() == 0)
        return canonical(Poly::term(depth, 0, d));
    if (divide(u, v).exact())
        return canonical(v.scale(d));

    // Subresultant remainder sequence (Collins; Brown-Traub).
    Poly g = Poly::constant(depth - 1, 1);
    Poly h = g;
    for (;;) {
        Poly r = pseudo_remainder(u, v);
        if (r.is_zero())
            return canonical(primitive_part(v).scale(d));
        if (r.degree() == 0)
            return canonical(Poly::term(depth, 0, d));
        const std::uint64_t delta = u.degree() - v.degree();
        u = std::move(v);
        v = divide_coefficients(r, g * pow(h, delta));
        g = u.leading();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            DivisionResult next = divide(pow(g, delta), pow(h, delta - 1));
            if (!next.exact())
                throw InternalError("subresultant scaling not exact");
            h = std::move(next.quotient);
        }
    }
}

std::vector<Monomial> to_monomials(const Poly& p)
{
    std::vector<Monomial> out;
    if (p.depth() == 0) {
        if (!p.is_zero())
            out.push_back({{}, p.value()});
        return out;
    }
    for (std::size_t i = 0; i < p.size(); ++i)
        for (auto& m : to_monomials(p.coeff(i))) {
            m.exponents.insert(m.exponents.begin(), p.exponent(i));
            out.push_back(std::move(m));
        }
    return out;
}

namespace {

using MonoIter = std::vector<Monomial>::const_iterator;

Poly build_sorted(std::size_t depth, std::size_t level, MonoIter first, MonoIter last)
{
    if (level == depth) {
        Integer sum;
        for (auto it = first; it != last; ++it)
            sum += it->coeff;
        return Poly(sum);
    }
    std::vector<std::pair<Poly::Exponent, Poly>> terms;
    while (first != last) {
        const Poly::Exponent e = first->exponents[level];
        auto group_end = std::find_if(first, last, [&](const Monomial& m) { return m.exponents[level] != e; });
        Poly c = build_sorted(depth, level + 1, first, group_end);
        if (!c.is_zero())
            terms.emplace_back(e, std::move(c));
        first = group_end;
    }
    return Poly::from_terms(depth - level, std::move(terms));
}

} // namespace

Poly from_monomials(std::size_t depth, std::vector<Monomial> monomials)
{
    for (const auto& m : monomials)
        if (m.exponents.size() != depth)
            throw InternalError("monomial has wrong number of exponents");
    std::sort(monomials.begin(), monomials.end(),
              [](const Monomial& l, const Monomial& r) { return l.exponents > r.exponents; });
    if (depth == 0) {
        Integer sum;
        for (const auto& m : monomials)
            sum += m.coeff;
        return Poly(sum);
    }
    return build_sorted(depth, 0, monomials.cbegin(), monomials.cend());
}

Poly permute_variables(const Poly& p, const std::vector<std::size_t>& permutation)
{
    if (permutation.size() != p.depth())
        throw InternalError("permutation size differs from depth");
    auto monomials = to_monomials(p);
    for (auto& m : monomials) {
        std::vector<Poly::Exponent> moved(m.exponents.size());
        for (std::size_t i = 0; i < m.exponents.size(); ++i)
            moved[permutation[i]] = m.exponents[i];
        m.exponents = std::move(moved);
    }
    return from_monomials(p.depth(), std::move(monomials));
}

namespace {

Poly substitute_from(const Poly& p, const std::vector<Poly>& values, std::size_t offset, std::size_t target)
{
    if (p.depth() == 0)
        return Poly::constant(target, p.value());
    if (p.is_zero())
        return Poly::zero(target);
    const Poly& x = values[offset];
    // Horner over the sparse exponents.
    Poly acc = substitute_from(p.coeff(0), values, offset + 1, target);
    for (std::size_t i = 1; i < p.size(); ++i) {
        acc = acc * pow(x, p.exponent(i - 1) - p.exponent(i));
        acc = acc + substitute_from(p.coeff(i), values, offset + 1, target);
    }
    return acc * pow(x, p.exponent(p.size() - 1));
}

} // namespace

Poly substitute(const Poly& p, const std::vector<Poly>& values)
{
    if (values.size() != p.depth())
        throw InternalError("substitution needs one value per variable");
    const std::size_t target = values.empty() ? 0 : values.front().depth();
    for (const auto& v : values)
        if (v.depth() != target)
            throw InternalError("substitution values live in different rings");
    return substitute_from(p, values, 0, target);
}

} // namespace divseq
