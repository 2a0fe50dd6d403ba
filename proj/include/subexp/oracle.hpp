#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace subexp {

/**
 * Brute-force ground truth for small abelian groups. Subgroups are found
 * as closures of generator tuples, with no lattice-theoretic shortcuts,
 * so the results are independent of every counting formula they check.
 */

/// The group Z_{m1} x ... x Z_{mr}, elements as coordinate tuples.
struct AbelianGroupTable {
    std::vector<std::uint64_t> moduli;

    std::uint64_t order() const;
    int rank() const { return static_cast<int>(moduli.size()); }
};

/// A subgroup as its canonical sorted element list.
using SubgroupSet = std::vector<std::vector<std::uint64_t>>;

/// Smallest subgroup containing the generators.
SubgroupSet closure(const std::vector<std::vector<std::uint64_t>>& generators,
                    const AbelianGroupTable& g);

/// Every subgroup of G exactly once, via closures of all rank-many
/// element tuples. Default order bounds: 4096 for rank <= 2, 729 for rank 3.
std::set<SubgroupSet> all_subgroups(const AbelianGroupTable& g, std::uint64_t max_order = 0);

/// lcm of the element orders.
std::uint64_t subgroup_exponent(const SubgroupSet& h, const AbelianGroupTable& g);

/// Invariant factors (d1, d2, ...) with d1 | d2 | ..., padded with leading
/// 1's to the ambient rank.
std::vector<std::uint64_t> subgroup_type(const SubgroupSet& h, const AbelianGroupTable& g);

/// Histogram of subgroup exponents.
std::map<std::uint64_t, std::uint64_t> oracle_distribution(const AbelianGroupTable& g);

/// Number of cyclic subgroups (order equals exponent; includes the
/// trivial subgroup).
std::uint64_t oracle_cyclic_count(const AbelianGroupTable& g);

}  // namespace subexp
