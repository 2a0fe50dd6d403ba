#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace subexp {

/**
 * The analytic layer around the mean exponent A(n) of the subgroups of
 * Z_n x Z_n: A(n) = sigma(n)^2 / s(n) with s(n) = s(n,n), its normalized
 * companion f(n) = A(n)/n, the prime-power increments g = mobius * f,
 * the mean value M of f as an Euler product, and partial-sum diagnostics
 * against (M/2) x^2.
 *
 * Everything except the mean value and report ratios is exact rational.
 */

/// s(n) = s(n,n), assembled multiplicatively from the rank-2 prime-power
/// totals.
mpz_class s_nn(std::uint64_t n);

/// A(n) = sigma(n)^2 / s(n), reduced. Multiplicative; A(n) <= n.
mpq_class mean_exponent_A(std::uint64_t n);

/// f(n) = A(n)/n, in (0, 1].
mpq_class mean_exponent_f(std::uint64_t n);

/// g(p^nu) = f(p^nu) - f(p^{nu-1}) by the explicit closed form
/// (2STp + T - pS^2(2nu+1)) / (p^nu T (Tp + 2nu+1)) with
/// S = sum p^i and T = sum (2i+1) p^{nu-1-i} over i = 0..nu-1.
mpq_class g_prime_power(std::uint64_t p, int nu);

/// g(n) assembled multiplicatively; g(1) = 1.
mpq_class g_multiplicative(std::uint64_t n);

struct MeanValueResult {
    double value;
    double error_estimate;  // |value(prime_limit) - value(prime_limit/2)|
};

/// Truncated Euler product prod_{p <= prime_limit} (1 - 1/p) sum_nu f(p^nu)/p^nu,
/// each local series cut when the next term's relative contribution drops
/// below rel_tol.
MeanValueResult mean_value_M(std::uint64_t prime_limit, double rel_tol = 1e-15);

/// Exact partial sums sum_{n <= x} f(n) and sum_{n <= x} A(n).
mpq_class partial_sum_f(std::uint64_t x);
mpq_class partial_sum_A(std::uint64_t x);

struct AsymptoticRow {
    std::uint64_t x;
    mpq_class sum_A;
    double prediction;  // (M/2) x^2
    double ratio;       // sum_A / prediction
};

/// One row per x; x_values must be ascending.
std::vector<AsymptoticRow> asymptotic_report(const std::vector<std::uint64_t>& x_values,
                                             std::uint64_t prime_limit);

/// CSV rendering with header "x,sum_A,prediction,ratio".
std::string asymptotic_report_csv(const std::vector<AsymptoticRow>& rows);

}  // namespace subexp
