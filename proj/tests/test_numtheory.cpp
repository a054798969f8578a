#include <doctest.h>

#include "divseq/errors.hpp"
#include "divseq/numtheory.hpp"
#include "oracles.hpp"

using namespace divseq;

TEST_CASE("divisors")
{
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
    CHECK(divisors(12) == oracle::divisors_by_scan(12));
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(7) == std::vector<std::uint64_t>{1, 7});
    for (std::uint64_t n = 1; n <= 500; ++n)
        CHECK(divisors(n) == oracle::divisors_by_scan(n));
}

TEST_CASE("factorize")
{
    CHECK(factorize(12).factors == std::vector<PrimePower>{{2, 2}, {3, 1}});
    CHECK(factorize(1).factors.empty());
    CHECK(factorize(97).factors == std::vector<PrimePower>{{97, 1}});
    CHECK(factorize(18446744073709551615ULL).factors ==
          std::vector<PrimePower>{{3, 1}, {5, 1}, {17, 1}, {257, 1}, {641, 1}, {65537, 1}, {6700417, 1}});
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        std::uint64_t product = 1;
        std::uint64_t last = 1;
        for (const auto& [p, e] : factorize(n).factors) {
            CHECK(p > last);
            CHECK(e >= 1);
            last = p;
            for (unsigned k = 0; k < e; ++k)
                product *= p;
        }
        CHECK(product == n);
    }
}

TEST_CASE("mobius and euler_phi")
{
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(2) == -1);
    CHECK(mobius(12) == 0);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(6) == 2);
    for (std::uint64_t n = 1; n <= 300; ++n) {
        CHECK(mobius(n) == oracle::mobius_by_scan(n));
        CHECK(euler_phi(n) == oracle::phi_by_count(n));
    }
}

TEST_CASE("divisor sums")
{
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        std::uint64_t phi_sum = 0;
        int mu_sum = 0;
        for (auto d : divisors(n)) {
            phi_sum += euler_phi(d);
            mu_sum += mobius(d);
        }
        CHECK(phi_sum == n);
        CHECK(mu_sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("divisors are the products of prime-power divisors")
{
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        std::vector<std::uint64_t> built{1};
        for (const auto& [p, e] : factorize(n).factors) {
            std::vector<std::uint64_t> next;
            for (auto d : built) {
                std::uint64_t power = 1;
                for (unsigned k = 0; k <= e; ++k, power *= p)
                    next.push_back(d * power);
            }
            built = std::move(next);
        }
        std::sort(built.begin(), built.end());
        CHECK(built == divisors(n));
    }
}

TEST_CASE("zero is rejected")
{
    CHECK_THROWS_AS(divisors(0), UsageError);
    CHECK_THROWS_AS(factorize(0), UsageError);
    CHECK_THROWS_AS(mobius(0), UsageError);
    CHECK_THROWS_AS(euler_phi(0), UsageError);
}
