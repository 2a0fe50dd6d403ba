#include <doctest.h>

#include <algorithm>
#include <random>

#include "subexp/partition.hpp"

using namespace subexp;

TEST_CASE("conjugate matches known values") {
    CHECK(conjugate(Partition({4, 2})) == Partition({2, 2, 1, 1}));
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(Partition({2, 2, 1})) == Partition({3, 2}));
}

TEST_CASE("conjugate is an involution up to weight 12") {
    for (int w = 0; w <= 12; ++w)
        for (const Partition& lambda : partitions_of_weight(w))
            CHECK(conjugate(conjugate(lambda)) == lambda);
}

TEST_CASE("containment") {
    CHECK(contains(Partition({4, 2}), Partition({2, 1})));
    CHECK_FALSE(contains(Partition({4, 2}), Partition({3, 3})));
    CHECK(contains(Partition({4, 2}), Partition{}));
    CHECK(contains(Partition{}, Partition{}));
}

TEST_CASE("containment is transitive (random sampling)") {
    std::mt19937 rng(7);
    auto pool = partitions_of_weight(6);
    for (const Partition& lambda : partitions_of_weight(8)) {
        for (int trial = 0; trial < 20; ++trial) {
            const Partition& mu = pool[rng() % pool.size()];
            const Partition& nu = pool[rng() % pool.size()];
            if (contains(lambda, mu) && contains(mu, nu)) CHECK(contains(lambda, nu));
        }
    }
}

TEST_CASE("subpartitions with prescribed first part") {
    auto got = subpartitions_with_first_part(Partition({2, 1}), 1);
    CHECK(got == std::vector<Partition>{Partition({1}), Partition({1, 1})});

    got = subpartitions_with_first_part(Partition({4, 2}), 0);
    CHECK(got == std::vector<Partition>{Partition{}});

    got = subpartitions_with_first_part(Partition({4, 2}), 2);
    CHECK(got == std::vector<Partition>{Partition({2}), Partition({2, 1}), Partition({2, 2})});

    CHECK(subpartitions_with_first_part(Partition({4, 2}), 5).empty());
}

TEST_CASE("first-part slices partition the set of sub-partitions") {
    for (int w = 0; w <= 10; ++w) {
        for (const Partition& lambda : partitions_of_weight(w)) {
            std::size_t sliced = 0;
            for (int i = 0; i <= lambda.first(); ++i)
                sliced += subpartitions_with_first_part(lambda, i).size();
            auto all = subpartitions(lambda);
            CHECK(sliced == all.size());
            // each sub-partition appears exactly once and is contained
            std::sort(all.begin(), all.end());
            CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
            for (const Partition& mu : all) CHECK(contains(lambda, mu));
        }
    }
}

TEST_CASE("text round trip") {
    CHECK(Partition::parse("4.2.2").to_string() == "4.2.2");
    CHECK(Partition::parse("0") == Partition{});
    CHECK(Partition{}.to_string() == "0");
    CHECK_THROWS(Partition::parse("2.3"));
}
