#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "subexp/oracle.hpp"
#include "subexp/partition.hpp"
#include "subexp/pgroup.hpp"
#include "subexp/rank2.hpp"

using namespace subexp;

TEST_CASE("closure basics") {
    AbelianGroupTable g{{4, 2}};
    CHECK(closure({}, g) == SubgroupSet{{0, 0}});
    CHECK(closure({{1, 0}}, g) == SubgroupSet{{0, 0}, {1, 0}, {2, 0}, {3, 0}});
    CHECK(closure({{1, 0}, {0, 1}}, g).size() == 8);
}

TEST_CASE("all subgroups of tiny groups") {
    CHECK(all_subgroups(AbelianGroupTable{{2, 2}}).size() == 5);
    CHECK(all_subgroups(AbelianGroupTable{{5}}).size() == 2);
    CHECK(all_subgroups(AbelianGroupTable{{1}}).size() == 1);
    CHECK_THROWS_AS(all_subgroups(AbelianGroupTable{{100, 100}}), std::length_error);
}

TEST_CASE("rank bound assumption: r generators suffice") {
    // closures of (r+1)-tuples find nothing beyond closures of r-tuples
    for (auto moduli : std::vector<std::vector<std::uint64_t>>{{4, 4}, {8, 2}, {2, 2, 2},
                                                               {4, 2, 2}, {9, 3}, {3, 3, 3}}) {
        AbelianGroupTable g{moduli};
        std::vector<std::vector<std::uint64_t>> elements;
        {
            std::vector<std::uint64_t> coords(moduli.size(), 0);
            while (true) {
                elements.push_back(coords);
                std::size_t pos = moduli.size();
                while (pos-- > 0) {
                    if (++coords[pos] < moduli[pos]) break;
                    coords[pos] = 0;
                }
                if (pos == static_cast<std::size_t>(-1)) break;
            }
        }
        std::set<SubgroupSet> extended;
        std::vector<std::size_t> pick(moduli.size() + 1, 0);
        while (true) {
            std::vector<std::vector<std::uint64_t>> gens;
            for (std::size_t idx : pick) gens.push_back(elements[idx]);
            extended.insert(closure(gens, g));
            std::size_t pos = pick.size();
            while (pos-- > 0) {
                if (++pick[pos] < elements.size()) break;
                pick[pos] = 0;
            }
            if (pos == static_cast<std::size_t>(-1)) break;
        }
        CHECK(extended == all_subgroups(g));
    }
}

TEST_CASE("exponent and type of known subgroups") {
    AbelianGroupTable g{{4, 2}};
    auto full = closure({{1, 0}, {0, 1}}, g);
    CHECK(subgroup_exponent(full, g) == 4);
    CHECK(subgroup_type(full, g) == std::vector<std::uint64_t>{2, 4});
    SubgroupSet trivial{{0, 0}};
    CHECK(subgroup_exponent(trivial, g) == 1);
    CHECK(subgroup_type(trivial, g) == std::vector<std::uint64_t>{1, 1});
}

TEST_CASE("materialized keys carry the predicted invariants") {
    for (std::uint64_t m : {4, 6, 8}) {
        for (std::uint64_t n : {4, 9}) {
            AbelianGroupTable g{{m, n}};
            for (const auto& key : enumerate_keys(m, n)) {
                SubgroupSet h;
                for (const auto& [x, y] : materialize(key, m, n)) h.push_back({x, y});
                auto inv = key_invariants(key);
                CHECK(h.size() == inv.order);
                CHECK(subgroup_exponent(h, g) == inv.exponent);
                CHECK(subgroup_type(h, g) ==
                      std::vector<std::uint64_t>{inv.type.first, inv.type.second});
            }
        }
    }
}

TEST_CASE("theorem keys exhaust the subgroup lattice") {
    for (std::uint64_t m = 1; m <= 12; ++m) {
        for (std::uint64_t n = 1; m * n <= 96; ++n) {
            AbelianGroupTable g{{m, n}};
            std::set<SubgroupSet> from_keys;
            for (const auto& key : enumerate_keys(m, n)) {
                SubgroupSet h;
                for (const auto& [x, y] : materialize(key, m, n)) h.push_back({x, y});
                from_keys.insert(h);
            }
            CHECK(from_keys == all_subgroups(g));
        }
    }
}

TEST_CASE("distribution matches the formula layer") {
    std::map<std::uint64_t, std::uint64_t> expected{{1, 1}, {2, 4},  {3, 5},   {4, 3},  {6, 20},
                                                    {9, 4}, {12, 15}, {18, 16}, {36, 12}};
    CHECK(oracle_distribution(AbelianGroupTable{{12, 18}}) == expected);
    CHECK(oracle_distribution(AbelianGroupTable{{1}}) ==
          std::map<std::uint64_t, std::uint64_t>{{1, 1}});

    // cross-module: Z_4 x Z_2 against the p-group profile of type (2,1)
    auto dist = oracle_distribution(AbelianGroupTable{{4, 2}});
    auto profile = exponent_profile(Partition({2, 1})).eval(2);
    REQUIRE(profile.size() == 3);
    CHECK(mpz_class(static_cast<unsigned long>(dist.at(1))) == profile[0]);
    CHECK(mpz_class(static_cast<unsigned long>(dist.at(2))) == profile[1]);
    CHECK(mpz_class(static_cast<unsigned long>(dist.at(4))) == profile[2]);
}

TEST_CASE("cyclic subgroup counts") {
    for (std::uint64_t e = 1; e <= 12; ++e) {
        AbelianGroupTable g{{e, e}};
        CHECK(mpz_class(static_cast<unsigned long>(oracle_cyclic_count(g))) ==
              cyclic_equivalent_count(e, e));
    }
}
