#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace subexp {

/**
 * Subgroups of Z_m x Z_n for arbitrary m, n, via the five-parameter
 * representation: a | m, b | a, c | n, d | c, a/b = c/d, and
 * 1 <= l <= a/b with gcd(l, a/b) = 1. Each tuple corresponds to exactly
 * one subgroup.
 */
struct SubgroupKey {
    std::uint64_t a, b, c, d, l;

    auto operator<=>(const SubgroupKey&) const = default;
};

struct SubgroupInvariants {
    std::uint64_t order;     // a * d
    std::uint64_t exponent;  // lcm(a, c)
    std::pair<std::uint64_t, std::uint64_t> type;  // (gcd(b,d), lcm(a,c))
};

/// Map from exponent E (a divisor of lcm(m,n)) to subgroup count.
using ExponentDistribution = std::map<std::uint64_t, mpz_class>;

/// All subgroup keys of Z_m x Z_n, sorted by (a,b,c,d,l).
std::vector<SubgroupKey> enumerate_keys(std::uint64_t m, std::uint64_t n);

/// True iff the key satisfies the divisibility and unit conditions for (m,n).
bool key_valid(const SubgroupKey& key, std::uint64_t m, std::uint64_t n);

/// The element set {(i*m/a mod m, (i*l*n/c + j*n/d) mod n)}.
std::set<std::pair<std::uint64_t, std::uint64_t>> materialize(const SubgroupKey& key,
                                                              std::uint64_t m,
                                                              std::uint64_t n);

/// Order a*d, exponent lcm(a,c), type (gcd(b,d), lcm(a,c)).
SubgroupInvariants key_invariants(const SubgroupKey& key);

/// s_E(m,n) = sum over i | m, j | n with lcm(i,j) = E of gcd(i,j);
/// 0 when E does not divide lcm(m,n).
mpz_class count_exponent_mn(std::uint64_t m, std::uint64_t n, std::uint64_t e);

/// Total subgroup count s(m,n) = sum over i | m, j | n of gcd(i,j).
mpz_class total_mn(std::uint64_t m, std::uint64_t n);

/// All nonzero s_E(m,n), keyed by exponent.
ExponentDistribution exponent_distribution(std::uint64_t m, std::uint64_t n);

/// s_E(n,n) computed through the cyclic-subgroup sum
/// sum over i | E, j | E with gcd(E/i, E/j) = 1 of gcd(i,j);
/// equals the number of cyclic subgroups of Z_E x Z_E. Requires E | n.
mpz_class cyclic_equivalent_count(std::uint64_t n, std::uint64_t e);

/// Sum of exponents over all subgroups: sigma(m) * sigma(n).
mpz_class sum_of_exponents(std::uint64_t m, std::uint64_t n);

}  // namespace subexp
