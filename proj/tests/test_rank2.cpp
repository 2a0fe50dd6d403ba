#include <doctest.h>

#include <random>
#include <set>

#include "subexp/arith.hpp"
#include "subexp/pgroup.hpp"
#include "subexp/rank2.hpp"

using namespace subexp;

TEST_CASE("key enumeration sizes") {
    CHECK(enumerate_keys(1, 1) == std::vector<SubgroupKey>{{1, 1, 1, 1, 1}});
    CHECK(enumerate_keys(12, 18).size() == 80);
    CHECK(enumerate_keys(5, 1).size() == 2);
    for (std::uint64_t m = 1; m <= 24; ++m)
        for (std::uint64_t n = 1; n <= 24; ++n)
            CHECK(mpz_class(static_cast<unsigned long>(enumerate_keys(m, n).size())) ==
                  total_mn(m, n));
}

TEST_CASE("materialized keys are pairwise distinct subgroups") {
    for (std::uint64_t m : {6, 8, 12}) {
        for (std::uint64_t n : {4, 9, 10}) {
            std::set<std::set<std::pair<std::uint64_t, std::uint64_t>>> seen;
            for (const auto& key : enumerate_keys(m, n)) {
                auto elements = materialize(key, m, n);
                auto inv = key_invariants(key);
                CHECK(elements.size() == inv.order);
                CHECK(seen.insert(elements).second);
                // closed under addition
                auto some = *elements.begin();
                for (const auto& [x, y] : elements)
                    CHECK(elements.count({(x + some.first) % m, (y + some.second) % n}) == 1);
            }
            CHECK(mpz_class(static_cast<unsigned long>(seen.size())) == total_mn(m, n));
        }
    }
}

TEST_CASE("key invariants from elements") {
    CHECK(key_invariants({1, 1, 1, 1, 1}).order == 1);
    CHECK(key_invariants({1, 1, 1, 1, 1}).exponent == 1);
    CHECK(key_invariants({4, 2, 2, 1, 1}).order == 4);
    CHECK(key_invariants({4, 2, 2, 1, 1}).exponent == 4);
    CHECK(key_invariants({4, 2, 2, 1, 1}).type == std::pair<std::uint64_t, std::uint64_t>{1, 4});

    for (std::uint64_t m = 1; m <= 16; ++m) {
        for (std::uint64_t n = 1; n <= 16; ++n) {
            for (const auto& key : enumerate_keys(m, n)) {
                auto inv = key_invariants(key);
                auto elements = materialize(key, m, n);
                CHECK(elements.size() == inv.order);
                std::uint64_t exponent = 1;
                for (const auto& [x, y] : elements) {
                    std::uint64_t ox = m / gcd_u64(x, m);
                    std::uint64_t oy = n / gcd_u64(y, n);
                    exponent = lcm_u64(exponent, lcm_u64(ox, oy));
                }
                CHECK(exponent == inv.exponent);
                CHECK(inv.type.first * inv.type.second == inv.order);
                CHECK(inv.type.second % inv.type.first == 0);
            }
        }
    }
}

TEST_CASE("exponent counts: paper values") {
    CHECK(count_exponent_mn(12, 18, 6) == 20);
    CHECK(count_exponent_mn(12, 18, 12) == 15);
    CHECK(count_exponent_mn(12, 18, 1) == 1);
    CHECK(count_exponent_mn(12, 18, 5) == 0);  // not a divisor of lcm
}

TEST_CASE("gcd-sum equals the ij-sum") {
    for (std::uint64_t m = 1; m <= 100; m += 7) {
        for (std::uint64_t n = 1; n <= 100; n += 9) {
            for (std::uint64_t e : divisors(lcm_u64(m, n))) {
                mpz_class ij_sum = 0;
                for (std::uint64_t i : divisors(m))
                    for (std::uint64_t j : divisors(n))
                        if (lcm_u64(i, j) == e)
                            ij_sum += mpz_class(static_cast<unsigned long>(i)) *
                                      static_cast<unsigned long>(j);
                CHECK(ij_sum % e == 0);
                CHECK(count_exponent_mn(m, n, e) == ij_sum / e);
            }
        }
    }
}

TEST_CASE("distribution totals and the sum-of-exponents identity") {
    ExponentDistribution expected{{1, 1}, {2, 4},  {3, 5},  {4, 3},  {6, 20},
                                  {9, 4}, {12, 15}, {18, 16}, {36, 12}};
    CHECK(exponent_distribution(12, 18) == expected);
    CHECK(exponent_distribution(1, 1) == ExponentDistribution{{1, 1}});

    for (std::uint64_t m = 1; m <= 60; m += 3) {
        for (std::uint64_t n = 1; n <= 60; n += 5) {
            mpz_class total = 0, weighted = 0;
            for (const auto& [e, count] : exponent_distribution(m, n)) {
                total += count;
                weighted += count * static_cast<unsigned long>(e);
            }
            CHECK(total == total_mn(m, n));
            CHECK(weighted == sum_of_exponents(m, n));
        }
    }
}

TEST_CASE("p-group column matches the symbolic rank-2 count") {
    for (unsigned long p : {2, 3, 5}) {
        for (int l1 = 0; l1 <= 4; ++l1) {
            for (int l2 = 0; l2 <= l1; ++l2) {
                std::uint64_t m = 1, n = 1;
                for (int k = 0; k < l1; ++k) m *= p;
                for (int k = 0; k < l2; ++k) n *= p;
                std::uint64_t pe = 1;
                for (int i = 0; i <= l1; ++i) {
                    CHECK(count_exponent_mn(m, n, pe) ==
                          count_exponent_rank2(l1, l2, i).eval(mpz_class(p)));
                    pe *= p;
                }
            }
        }
    }
}

TEST_CASE("multiplicative across coprime components") {
    std::mt19937 rng(11);
    int done = 0;
    while (done < 60) {
        std::uint64_t m1 = rng() % 20 + 1, n1 = rng() % 20 + 1;
        std::uint64_t m2 = rng() % 20 + 1, n2 = rng() % 20 + 1;
        std::uint64_t e1 = divisors(lcm_u64(m1, n1))[rng() % divisors(lcm_u64(m1, n1)).size()];
        std::uint64_t e2 = divisors(lcm_u64(m2, n2))[rng() % divisors(lcm_u64(m2, n2)).size()];
        if (gcd_u64(m1 * n1 * e1, m2 * n2 * e2) != 1) continue;
        CHECK(count_exponent_mn(m1 * m2, n1 * n2, e1 * e2) ==
              count_exponent_mn(m1, n1, e1) * count_exponent_mn(m2, n2, e2));
        ++done;
    }
}

TEST_CASE("cyclic-subgroup correspondence") {
    CHECK(cyclic_equivalent_count(7, 1) == 1);
    for (unsigned long p : {2, 3, 5})
        CHECK(cyclic_equivalent_count(2 * p, p) == p + 2);
    for (std::uint64_t n : {12, 36, 60})
        for (std::uint64_t e : divisors(n))
            CHECK(cyclic_equivalent_count(n, e) == count_exponent_mn(n, n, e));
    CHECK_THROWS_AS(cyclic_equivalent_count(10, 3), std::domain_error);
}

TEST_CASE("sum of exponents is sigma(m) sigma(n)") {
    CHECK(sum_of_exponents(1, 1) == 1);
    CHECK(sum_of_exponents(12, 18) == 1092);
    CHECK(sum_of_exponents(7, 1) == 8);
}
