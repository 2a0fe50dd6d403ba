#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace subexp {

/**
 * Univariate polynomial in the indeterminate p with unbounded integer
 * coefficients. Dense representation, coeffs[i] = coefficient of p^i.
 * The zero polynomial has an empty coefficient vector; otherwise the
 * leading coefficient is nonzero.
 *
 * All symbolic subgroup counts live in this ring; nothing is ever divided,
 * so every intermediate stays exact.
 */
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long constant);  // NOLINT(google-explicit-constructor)
    explicit IntPoly(std::vector<mpz_class> coeffs);

    /// The monomial c * p^k.
    static IntPoly monomial(mpz_class c, int k);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    mpz_class coeff(int k) const;

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly& operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

    bool operator==(const IntPoly&) const = default;

    /// Horner evaluation at an integer point, exact.
    mpz_class eval(const mpz_class& p) const;

    /// Canonical text form, descending degree: "3*p^2+5*p+7"; zero is "0".
    std::string to_string() const;

private:
    void normalize();
    std::vector<mpz_class> coeffs_;
};

/// Multiply by p^k.
IntPoly shift(const IntPoly& a, int k);

/**
 * Gaussian binomial coefficient binom(n,k)_p as a polynomial, built by the
 * q-Pascal recurrence binom(n,k) = binom(n-1,k-1) + p^k * binom(n-1,k).
 * Out-of-range k (k < 0 or k > n) is the zero polynomial; binom(n,0) = 1.
 * Results are memoized process-wide; the cache is thread-safe.
 */
IntPoly gauss_binom(int n, int k);

/// Geometric sum 1 + p + ... + p^{e}; zero polynomial when e < 0.
IntPoly geometric_sum(int e);

}  // namespace subexp
