#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "subexp/partition.hpp"
#include "subexp/polyring.hpp"

namespace subexp {

/**
 * Counting subgroups of finite abelian p-groups, symbolically in the
 * prime p. A group of type lambda = (l1,...,lk) is
 * Z_{p^{l1}} x ... x Z_{p^{lk}}.
 */

/// Counts of subgroups of exponent p^i, i = 0..lambda_1.
struct ExponentProfile {
    std::vector<IntPoly> counts;

    IntPoly total() const;
    std::vector<mpz_class> eval(const mpz_class& p) const;
};

/// A finite abelian group as primary components (prime, type).
struct GroupSpec {
    std::vector<std::pair<unsigned long, Partition>> components;

    /// Primary decomposition of Z_{m1} x ... x Z_{mr}.
    static GroupSpec from_moduli(const std::vector<unsigned long>& moduli);
};

/**
 * Number of subgroups of type mu in a p-group of type lambda, as a
 * polynomial in p (Delsarte-Djubjuk-Yeh count). Requires mu contained
 * in lambda.
 */
IntPoly alpha(const Partition& lambda, const Partition& mu);

/// Number of subgroups of exponent p^i, any rank: sum of alpha over all
/// sub-types with first part i. Zero polynomial for i > lambda_1; 1 for i = 0.
IntPoly count_exponent(const Partition& lambda, int i);

/// Rank-2 closed form for the exponent-p^i count (fast path; must agree
/// with count_exponent). Requires l1 >= l2 >= 0.
IntPoly count_exponent_rank2(int l1, int l2, int i);

/// Number of subgroups of type (i,j,l) in a rank <= 3 group, by the
/// ten-case closed form. Requires i >= j >= l >= 0.
IntPoly count_type_rank3(const Partition& lambda, int i, int j, int l);

/// Rank-3 closed form for the exponent-p^i count; reduces to the rank-2
/// form when lambda_3 = 0.
IntPoly count_exponent_rank3(const Partition& lambda, int i);

/// Total number of subgroups of Z_{p^{l1}} x Z_{p^{l2}}.
IntPoly total_rank2(int l1, int l2);

/// Total number of subgroups of a rank <= 3 group.
IntPoly total_rank3(const Partition& lambda);

/// Subgroups of exponent p in any group of rank k: the Galois number
/// minus 1, sum_{r=1}^{k} binom(k,r)_p.
IntPoly count_exponent_p(int k);

/// Subgroups of exponent p^2, any rank: parts are truncated to
/// min(part, 2) first; zero when no part is >= 2.
IntPoly count_exponent_p2(const Partition& lambda);

/// counts[i] = count_exponent(lambda, i) for i = 0..lambda_1.
ExponentProfile exponent_profile(const Partition& lambda);

/// True iff both types have the same number of subgroups of exponent p^i
/// for every i; equivalent to lambda == kappa.
bool profiles_isomorphic(const Partition& lambda, const Partition& kappa, const mpz_class& p);

/// Number of subgroups of exponent d in the general group G: product of
/// the per-prime exponent counts evaluated at each prime. Returns 0 when
/// d has a prime factor outside G or a valuation exceeding the type.
mpz_class count_exponent_general(const GroupSpec& g, unsigned long d);

}  // namespace subexp
