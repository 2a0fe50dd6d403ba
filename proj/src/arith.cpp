#include "subexp/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace subexp {

Factorization factor(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("cannot factor 0");
    Factorization f;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.factors.emplace_back(p, e);
    }
    if (n > 1) f.factors.emplace_back(n, 1);
    return f;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out{1};
    for (auto [p, e] : factor(n).factors) {
        std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

mpz_class sigma(std::uint64_t n) {
    mpz_class out = 1;
    for (auto [p, e] : factor(n).factors) {
        mpz_class term = 1, pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= static_cast<unsigned long>(p);
            term += pk;
        }
        out *= term;
    }
    return out;
}

mpz_class tau_sq(std::uint64_t n) {
    mpz_class out = 1;
    for (auto [p, e] : factor(n).factors) out *= 2 * e + 1;
    return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    return a / std::gcd(a, b) * b;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
    }
    return primes;
}

std::vector<std::uint32_t> smallest_prime_factor_table(std::uint32_t limit) {
    std::vector<std::uint32_t> spf(static_cast<std::size_t>(limit) + 1, 0);
    if (limit >= 1) spf[1] = 1;
    for (std::uint32_t p = 2; p <= limit; ++p) {
        if (spf[p] != 0) continue;
        for (std::uint64_t q = p; q <= limit; q += p)
            if (spf[q] == 0) spf[q] = p;
    }
    return spf;
}

}  // namespace subexp
