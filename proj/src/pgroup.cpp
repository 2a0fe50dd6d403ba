#include "subexp/pgroup.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "subexp/arith.hpp"

namespace subexp {

IntPoly ExponentProfile::total() const {
    IntPoly sum;
    for (const auto& c : counts) sum += c;
    return sum;
}

std::vector<mpz_class> ExponentProfile::eval(const mpz_class& p) const {
    std::vector<mpz_class> out;
    out.reserve(counts.size());
    for (const auto& c : counts) out.push_back(c.eval(p));
    return out;
}

GroupSpec GroupSpec::from_moduli(const std::vector<unsigned long>& moduli) {
    std::map<unsigned long, std::vector<int>> by_prime;
    for (unsigned long m : moduli) {
        if (m == 0) throw std::invalid_argument("zero modulus");
        for (auto [p, e] : factor(m).factors) by_prime[static_cast<unsigned long>(p)].push_back(e);
    }
    GroupSpec g;
    for (auto& [p, exps] : by_prime) {
        std::sort(exps.begin(), exps.end(), std::greater<>());
        g.components.emplace_back(p, Partition(exps));
    }
    return g;
}

IntPoly alpha(const Partition& lambda, const Partition& mu) {
    if (!contains(lambda, mu)) throw std::domain_error("type not contained");
    Partition a = conjugate(lambda);
    Partition b = conjugate(mu);
    IntPoly result{1};
    for (int i = 1; i <= lambda.first(); ++i) {
        int ai = a.part(i - 1);
        int bi = b.part(i - 1);
        int bi1 = b.part(i);
        result *= shift(gauss_binom(ai - bi1, bi - bi1), (ai - bi) * bi1);
    }
    return result;
}

IntPoly count_exponent(const Partition& lambda, int i) {
    if (i < 0) throw std::invalid_argument("negative exponent index");
    if (i == 0) return IntPoly{1};
    if (i > lambda.first()) return IntPoly{};
    IntPoly sum;
    for (const Partition& mu : subpartitions_with_first_part(lambda, i))
        sum += alpha(lambda, mu);
    return sum;
}

IntPoly count_exponent_rank2(int l1, int l2, int i) {
    if (l1 < l2 || l2 < 0) throw std::invalid_argument("invalid rank-2 type");
    if (i < 0) throw std::invalid_argument("negative exponent index");
    if (i == 0) return IntPoly{1};
    if (i > l1) return IntPoly{};
    if (i <= l2) {
        // 1 + sum_{j=0}^{i-1} (p+1) p^{i-j-1}
        return IntPoly{1} + IntPoly({1, 1}) * geometric_sum(i - 1);
    }
    // sum_{j=0}^{l2} p^{l2-j}
    return geometric_sum(l2);
}

namespace {

const IntPoly kPplus1({1, 1});          // p + 1
const IntPoly kP2plusPplus1({1, 1, 1}); // p^2 + p + 1

int padded_part(const Partition& lambda, int j) { return lambda.part(j); }

}  // namespace

IntPoly count_type_rank3(const Partition& lambda, int i, int j, int l) {
    if (lambda.rank() > 3) throw std::invalid_argument("rank exceeds 3");
    if (i < j || j < l || l < 0) throw std::domain_error("type parts must be ordered i >= j >= l >= 0");
    const int l1 = padded_part(lambda, 0);
    const int l2 = padded_part(lambda, 1);
    const int l3 = padded_part(lambda, 2);
    if (i > l1 || j > l2 || l > l3) return IntPoly{};

    if (i <= l3) {
        if (l == j && j == i) return IntPoly{1};
        if (l < j && j < i)
            return IntPoly::monomial(1, 2 * i - 2 * l - 3) * kPplus1 * kP2plusPplus1;
        // l < j = i, or l = j < i
        return IntPoly::monomial(1, 2 * (i - l - 1)) * kP2plusPplus1;
    }
    if (i <= l2) {
        if (j <= l3) {
            if (l < j) return IntPoly::monomial(1, l3 + i - 2 * l - 2) * kPplus1 * kPplus1;
            return IntPoly::monomial(1, l3 + i - 2 * j - 1) * kPplus1;  // l = j
        }
        if (j < i) return IntPoly::monomial(1, 2 * l3 + i - j - 2 * l - 1) * kPplus1;
        return IntPoly::monomial(1, 2 * (l3 - l));  // j = i
    }
    // l2 < i <= l1
    if (j > l3) return IntPoly::monomial(1, l2 + 2 * l3 - j - 2 * l);
    if (l < j) return IntPoly::monomial(1, l2 + l3 - 2 * l - 1) * kPplus1;
    return IntPoly::monomial(1, l2 + l3 - 2 * l);  // l = j <= l3
}

IntPoly count_exponent_rank3(const Partition& lambda, int i) {
    if (lambda.rank() > 3) throw std::invalid_argument("rank exceeds 3");
    if (i < 0) throw std::invalid_argument("negative exponent index");
    if (i == 0) return IntPoly{1};
    if (i > lambda.first()) return IntPoly{};
    IntPoly sum;
    for (int j = 0; j <= i; ++j)
        for (int l = 0; l <= j; ++l) sum += count_type_rank3(lambda, i, j, l);
    return sum;
}

IntPoly total_rank2(int l1, int l2) {
    IntPoly sum;
    for (int i = 0; i <= l1; ++i) sum += count_exponent_rank2(l1, l2, i);
    return sum;
}

IntPoly total_rank3(const Partition& lambda) {
    IntPoly sum;
    for (int i = 0; i <= lambda.first(); ++i) sum += count_exponent_rank3(lambda, i);
    return sum;
}

IntPoly count_exponent_p(int k) {
    if (k < 0) throw std::invalid_argument("negative rank");
    IntPoly sum;
    for (int r = 1; r <= k; ++r) sum += gauss_binom(k, r);
    return sum;
}

IntPoly count_exponent_p2(const Partition& lambda) {
    // Truncate every part to min(part, 2); only the count of parts >= 2
    // and the rank matter.
    const int k = lambda.rank();
    int t = 0;
    for (int part : lambda.parts())
        if (part >= 2) ++t;
    IntPoly sum;
    for (int r = 1; r <= t; ++r)
        for (int s = 0; s <= k - r; ++s)
            sum += shift(gauss_binom(k - r, s) * gauss_binom(t, r), r * (k - r - s));
    return sum;
}

ExponentProfile exponent_profile(const Partition& lambda) {
    ExponentProfile profile;
    for (int i = 0; i <= lambda.first(); ++i)
        profile.counts.push_back(count_exponent(lambda, i));
    return profile;
}

bool profiles_isomorphic(const Partition& lambda, const Partition& kappa, const mpz_class& p) {
    auto a = exponent_profile(lambda).eval(p);
    auto b = exponent_profile(kappa).eval(p);
    std::size_t n = std::max(a.size(), b.size());
    a.resize(n, mpz_class(0));
    b.resize(n, mpz_class(0));
    return a == b;
}

mpz_class count_exponent_general(const GroupSpec& g, unsigned long d) {
    if (d == 0) throw std::invalid_argument("exponent must be positive");
    mpz_class result = 1;
    for (auto [q, e] : factor(d).factors) {
        const Partition* type = nullptr;
        for (const auto& [p, lam] : g.components)
            if (p == q) type = &lam;
        if (!type) return 0;  // prime of d absent from G
        result *= count_exponent(*type, e).eval(mpz_class(q));
        if (result == 0) return 0;
    }
    return result;
}

}  // namespace subexp
