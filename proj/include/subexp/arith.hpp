#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace subexp {

/// Prime factorization with primes strictly increasing.
struct Factorization {
    std::vector<std::pair<std::uint64_t, int>> factors;  // (prime, multiplicity)
};

/// Trial-division factorization; n >= 1.
Factorization factor(std::uint64_t n);

/// All positive divisors of n, sorted ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Sum of divisors sigma(n).
mpz_class sigma(std::uint64_t n);

/// Number of divisors of n^2, i.e. prod (2*a_i + 1).
mpz_class tau_sq(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// All primes <= limit (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Smallest-prime-factor table for 1..limit; spf[1] = 1.
std::vector<std::uint32_t> smallest_prime_factor_table(std::uint32_t limit);

}  // namespace subexp
