#include "subexp/rank2.hpp"

#include <algorithm>
#include <stdexcept>

#include "subexp/arith.hpp"

namespace subexp {

std::vector<SubgroupKey> enumerate_keys(std::uint64_t m, std::uint64_t n) {
    if (m == 0 || n == 0) throw std::invalid_argument("moduli must be positive");
    std::vector<SubgroupKey> keys;
    for (std::uint64_t a : divisors(m)) {
        for (std::uint64_t b : divisors(a)) {
            std::uint64_t e = a / b;
            for (std::uint64_t c : divisors(n)) {
                if (c % e) continue;
                std::uint64_t d = c / e;  // forces a/b = c/d
                for (std::uint64_t l = 1; l <= e; ++l)
                    if (gcd_u64(l, e) == 1) keys.push_back({a, b, c, d, l});
            }
        }
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

bool key_valid(const SubgroupKey& key, std::uint64_t m, std::uint64_t n) {
    auto [a, b, c, d, l] = key;
    if (!a || !b || !c || !d || !l) return false;
    if (m % a || a % b || n % c || c % d) return false;
    if (a / b != c / d) return false;
    std::uint64_t e = a / b;
    return l <= e && gcd_u64(l, e) == 1;
}

std::set<std::pair<std::uint64_t, std::uint64_t>> materialize(const SubgroupKey& key,
                                                              std::uint64_t m,
                                                              std::uint64_t n) {
    if (!key_valid(key, m, n)) throw std::domain_error("invalid subgroup key for ambient group");
    auto [a, b, c, d, l] = key;
    std::set<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t i = 0; i < a; ++i)
        for (std::uint64_t j = 0; j < d; ++j)
            out.emplace(i * (m / a) % m, (i * l * (n / c) + j * (n / d)) % n);
    return out;
}

SubgroupInvariants key_invariants(const SubgroupKey& key) {
    auto [a, b, c, d, l] = key;
    std::uint64_t exponent = lcm_u64(a, c);
    return {a * d, exponent, {gcd_u64(b, d), exponent}};
}

mpz_class count_exponent_mn(std::uint64_t m, std::uint64_t n, std::uint64_t e) {
    if (m == 0 || n == 0 || e == 0) throw std::invalid_argument("arguments must be positive");
    if (lcm_u64(m, n) % e) return 0;
    mpz_class sum = 0;
    for (std::uint64_t i : divisors(m)) {
        if (e % i) continue;
        for (std::uint64_t j : divisors(n))
            if (lcm_u64(i, j) == e) sum += static_cast<unsigned long>(gcd_u64(i, j));
    }
    return sum;
}

mpz_class total_mn(std::uint64_t m, std::uint64_t n) {
    if (m == 0 || n == 0) throw std::invalid_argument("arguments must be positive");
    mpz_class sum = 0;
    for (std::uint64_t i : divisors(m))
        for (std::uint64_t j : divisors(n)) sum += static_cast<unsigned long>(gcd_u64(i, j));
    return sum;
}

ExponentDistribution exponent_distribution(std::uint64_t m, std::uint64_t n) {
    ExponentDistribution dist;
    for (std::uint64_t i : divisors(m))
        for (std::uint64_t j : divisors(n))
            dist[lcm_u64(i, j)] += static_cast<unsigned long>(gcd_u64(i, j));
    return dist;
}

mpz_class cyclic_equivalent_count(std::uint64_t n, std::uint64_t e) {
    if (n == 0 || e == 0) throw std::invalid_argument("arguments must be positive");
    if (n % e) throw std::domain_error("exponent must divide the modulus");
    mpz_class sum = 0;
    for (std::uint64_t i : divisors(e))
        for (std::uint64_t j : divisors(e))
            if (gcd_u64(e / i, e / j) == 1) sum += static_cast<unsigned long>(gcd_u64(i, j));
    return sum;
}

mpz_class sum_of_exponents(std::uint64_t m, std::uint64_t n) {
    return sigma(m) * sigma(n);
}

}  // namespace subexp
