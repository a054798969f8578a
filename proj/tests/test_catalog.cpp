#include <doctest.h>

#include "divseq/catalog.hpp"
#include "divseq/numtheory.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace divseq;
using namespace testing;

namespace {

std::vector<std::string> first_terms(std::string_view name, std::size_t count, const ParamMap& params = {})
{
    std::vector<std::string> out;
    for (const auto& t : builtin(name, params).generate(count))
        out.push_back(t.str());
    return out;
}

/// (x^n - 1) divided in turn by Phi_d for every proper divisor d, on dense vectors.
oracle::Dense cyclotomic_by_division(unsigned n, const std::vector<oracle::Dense>& lower)
{
    auto p = oracle::x_pow_minus_one(n);
    for (auto d : oracle::divisors_by_scan(n))
        if (d < n)
            p = oracle::div_exact(p, lower.at(d - 1));
    return p;
}

} // namespace

TEST_CASE("first terms of the built-in sequences")
{
    CHECK(first_terms("fibonacci_poly", 4) == std::vector<std::string>{"1", "x", "x^2+1", "x^3+2*x"});
    CHECK(first_terms("chebyshev_u", 3) == std::vector<std::string>{"1", "2*x", "4*x^2-1"});
    CHECK(first_terms("s3_poly", 4) == std::vector<std::string>{"1", "x", "x*z+y", "x^2*z+2*x*y"});
    CHECK(first_terms("xn_minus_1", 3) == std::vector<std::string>{"x-1", "x^2-1", "x^3-1"});
    CHECK(first_terms("xn_minus_yn", 2) == std::vector<std::string>{"x-y", "x^2-y^2"});
    CHECK(first_terms("bn_minus_1", 3, {{"b", 10}}) == std::vector<std::string>{"9", "99", "999"});
    CHECK(first_terms("mersenne", 4) == std::vector<std::string>{"1", "3", "7", "15"});
    CHECK(first_terms("un_vn", 3) == std::vector<std::string>{"1", "5", "19"});
    CHECK(first_terms("un_vn", 2, {{"u", 5}, {"v", 3}}) == std::vector<std::string>{"2", "16"});
    CHECK(first_terms("repunit", 4) == std::vector<std::string>{"1", "11", "111", "1111"});
    CHECK(first_terms("fibonacci", 8) == std::vector<std::string>{"1", "1", "2", "3", "5", "8", "13", "21"});
    CHECK(first_terms("triangular", 5) == std::vector<std::string>{"1", "3", "6", "10", "15"});
    CHECK(first_terms("factorial", 5) == std::vector<std::string>{"1", "2", "6", "24", "120"});
    CHECK(first_terms("geometric", 3, {{"q", -3}}) == std::vector<std::string>{"-3", "9", "-27"});
    CHECK(first_terms("constant", 2) == std::vector<std::string>{"5", "5"});
    CHECK(first_terms("natural", 4) == std::vector<std::string>{"1", "2", "3", "4"});
}

TEST_CASE("the s3 recurrence alternates its multiplier with parity")
{
    const auto terms = builtin("s3_poly").generate(12);
    const auto x = pxyz("x"), y = pxyz("y"), z = pxyz("z");
    for (std::size_t n = 3; n <= terms.size(); ++n) {
        const auto& lead = n % 2 == 0 ? x : z;
        CHECK(terms[n - 1] == lead * terms[n - 2] + y * terms[n - 3]);
    }
}

TEST_CASE("catalog metadata and parameter validation")
{
    CHECK(catalog().size() == 15);
    for (const auto& entry : catalog()) {
        CAPTURE(entry.name);
        const auto spec = builtin(entry.name);
        CHECK(spec.name() == entry.name);
        CHECK(spec.ring() == entry.ring);
        for (const auto& p : entry.params)
            CHECK(spec.params().at(p.name) == p.default_value);
        for (const auto& t : spec.generate(6))
            CHECK(t.ring() == entry.ring);
    }
    CHECK(catalog_entry("triangular").expected == Expectation::not_strong);
    CHECK(catalog_entry("fibonacci").expected == Expectation::strong);
    CHECK(to_string(Expectation::unknown) == "unknown");

    CHECK_THROWS_WITH_AS(builtin("lucas"), doctest::Contains("fibonacci"), UsageError);
    CHECK_THROWS_AS(builtin("un_vn", {{"u", 4}, {"v", 2}}), UsageError);
    CHECK_THROWS_AS(builtin("un_vn", {{"u", 2}, {"v", 3}}), UsageError);
    CHECK_THROWS_AS(builtin("un_vn", {{"u", 3}, {"v", 0}}), UsageError);
    CHECK_THROWS_AS(builtin("bn_minus_1", {{"b", 1}}), UsageError);
    CHECK_THROWS_AS(builtin("geometric", {{"q", 0}}), UsageError);
    CHECK_THROWS_AS(builtin("constant", {{"a", 0}}), UsageError);
    CHECK_THROWS_AS(builtin("fibonacci", {{"b", 2}}), UsageError);
}

TEST_CASE("cyclotomic_phi examples")
{
    CHECK(cyclotomic_phi(1) == px("x-1"));
    CHECK(cyclotomic_phi(6) == px("x^2-x+1"));
    CHECK(cyclotomic_phi(12) == px("x^4-x^2+1"));
    CHECK(to_dense(cyclotomic_phi(12)) == oracle::cyclotomic_by_mobius(12));
    CHECK_THROWS_AS(cyclotomic_phi(0), UsageError);
}

TEST_CASE("three routes to the cyclotomic polynomials agree")
{
    const unsigned limit = 30;
    const auto phis = cyclotomic_phis(limit);
    std::vector<oracle::Dense> lower;
    for (unsigned n = 1; n <= limit; ++n) {
        CAPTURE(n);
        const auto by_division = cyclotomic_by_division(n, lower);
        lower.push_back(by_division);
        CHECK(to_dense(phis[n - 1]) == oracle::cyclotomic_by_mobius(n));
        CHECK(to_dense(phis[n - 1]) == by_division);
        CHECK(phis[n - 1] == cyclotomic_phi(n));
        CHECK(phis[n - 1].poly().degree() == euler_phi(n));
        CHECK(phis[n - 1].poly().leading().is_constant());
        CHECK(divisor_product(phis, n) == RingElement(ring_x(), pow(px("x").poly(), n) - Poly::constant(1, 1)));
    }
}

TEST_CASE("cyclotomic_phi_at")
{
    CHECK(cyclotomic_phi_at(6, 2) == 3);
    CHECK(cyclotomic_phi_at(1, 2) == 1);
    CHECK(cyclotomic_phi_at(4, 10) == 101);
    CHECK_THROWS_AS(cyclotomic_phi_at(3, 1), UsageError);
    CHECK_THROWS_AS(cyclotomic_phi_at(0, 2), UsageError);

    for (long long b : {2LL, 3LL, 10LL})
        for (unsigned n = 1; n <= 30; ++n) {
            CAPTURE(b);
            CAPTURE(n);
            const auto value = eval(cyclotomic_phi(n), {{"x", zz(b)}});
            CHECK(cyclotomic_phi_at(n, b) == value.to_integer());
            if (n <= 12)
                CHECK(value == zz(oracle::eval(oracle::cyclotomic_by_mobius(n), b)));
        }
}

TEST_CASE("psi")
{
    CHECK(psi(1) == pxy("x-y"));
    CHECK(psi(2) == pxy("x+y"));
    CHECK(psi(6) == pxy("x^2-x*y+y^2"));
    CHECK_THROWS_AS(psi(0), UsageError);

    const unsigned limit = 20;
    std::vector<RingElement> psis;
    for (unsigned n = 1; n <= limit; ++n)
        psis.push_back(psi(n));
    const auto lcm_route = lcm_sequence(builtin("xn_minus_yn"), limit).c;
    const auto x = pxy("x"), y = pxy("y");
    for (unsigned n = 1; n <= limit; ++n) {
        CAPTURE(n);
        const auto& p = psis[n - 1];
        CHECK(p == lcm_route[n - 1]);
        CHECK(divisor_product(psis, n) == pow(x, n) - pow(y, n));
        CHECK(is_associate(eval(p, {{"x", px("x")}, {"y", px("1")}}), cyclotomic_phi(n)));
        // Homogeneous of degree phi(n): every monomial has the same total degree.
        for (const auto& m : to_monomials(p.poly()))
            CHECK(m.exponents[0] + m.exponents[1] == euler_phi(n));
    }
}

TEST_CASE("the lcm-sequence of u^n - v^n is Psi_n(u, v)")
{
    for (auto [u, v] : {std::pair{3LL, 2LL}, std::pair{5LL, 3LL}}) {
        const auto c = lcm_sequence(builtin("un_vn", {{"u", u}, {"v", v}}), 20).c;
        for (unsigned n = 1; n <= 20; ++n) {
            CAPTURE(n);
            CHECK(c[n - 1] == eval(psi(n), {{"x", zz(u)}, {"y", zz(v)}}));
        }
    }
}

TEST_CASE("catalog flags agree with the strong-divisibility check")
{
    for (const auto& entry : catalog()) {
        CAPTURE(entry.name);
        const std::size_t count = entry.ring.num_variables() > 1 ? 12 : 30;
        const auto report = check_strong_divisibility(builtin(entry.name), count);
        CHECK(report.holds == (entry.expected == Expectation::strong));
    }
}
