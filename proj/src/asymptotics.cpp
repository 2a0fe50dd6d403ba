#include "subexp/asymptotics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "subexp/arith.hpp"
#include "subexp/pgroup.hpp"

namespace subexp {

mpz_class s_nn(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("argument must be positive");
    mpz_class out = 1;
    for (auto [p, e] : factor(n).factors)
        out *= total_rank2(e, e).eval(mpz_class(static_cast<unsigned long>(p)));
    return out;
}

mpq_class mean_exponent_A(std::uint64_t n) {
    mpz_class s = sigma(n);
    mpq_class a(s * s, s_nn(n));
    a.canonicalize();
    return a;
}

mpq_class mean_exponent_f(std::uint64_t n) {
    mpq_class f = mean_exponent_A(n) / mpq_class(static_cast<unsigned long>(n));
    f.canonicalize();
    return f;
}

mpq_class g_prime_power(std::uint64_t p, int nu) {
    if (nu < 1) throw std::invalid_argument("nu must be positive");
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class s = 0, t = 0, pk = 1;
    for (int i = 0; i < nu; ++i) {
        s += pk;  // p^i
        pk *= pz;
    }
    pk = 1;
    for (int i = nu - 1; i >= 0; --i) {
        t += (2 * i + 1) * pk;  // (2i+1) p^{nu-1-i}
        pk *= pz;
    }
    mpz_class p_nu;
    mpz_pow_ui(p_nu.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(nu));
    mpz_class num = 2 * s * t * pz + t - pz * s * s * (2 * nu + 1);
    mpz_class den = p_nu * t * (t * pz + 2 * nu + 1);
    mpq_class g(num, den);
    g.canonicalize();
    return g;
}

mpq_class g_multiplicative(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("argument must be positive");
    mpq_class out = 1;
    for (auto [p, e] : factor(n).factors) out *= g_prime_power(p, e);
    out.canonicalize();
    return out;
}

namespace {

double f_prime_power_double(double p, int nu) {
    // f(p^nu) = A(p^nu) / p^nu with
    // A(p^nu) = (p^{nu+1}-1)^2 / (p^{nu+2}+p^{nu+1}-(2nu+3)p+2nu+1).
    double p_nu = std::pow(p, nu);
    double num = p_nu * p - 1.0;
    double den = p_nu * p * p + p_nu * p - (2.0 * nu + 3.0) * p + 2.0 * nu + 1.0;
    return num * num / den / p_nu;
}

double local_euler_factor(double p, double rel_tol) {
    double sum = 1.0;  // nu = 0 term: f(1)/1
    double p_pow = 1.0;
    for (int nu = 1; nu < 200; ++nu) {
        p_pow *= p;
        double term = f_prime_power_double(p, nu) / p_pow;
        sum += term;
        if (term < rel_tol * sum) break;
    }
    return (1.0 - 1.0 / p) * sum;
}

}  // namespace

MeanValueResult mean_value_M(std::uint64_t prime_limit, double rel_tol) {
    if (prime_limit < 2) throw std::invalid_argument("prime_limit must be at least 2");
    double product = 1.0;
    double half_product = 1.0;
    std::uint64_t half = prime_limit / 2;
    for (std::uint64_t p : primes_up_to(prime_limit)) {
        product *= local_euler_factor(static_cast<double>(p), rel_tol);
        if (p <= half) half_product = product;
    }
    return {product, std::abs(product - half_product)};
}

namespace {

// Streaming pairwise summation of rationals: level k holds a partial sum
// of 2^k inputs, merged carry-style. Keeps intermediate denominators far
// smaller than a single running total.
class RationalAccumulator {
public:
    void add(mpq_class v) {
        for (std::size_t k = 0;; ++k) {
            if (k == levels_.size()) {
                levels_.push_back(std::move(v));
                occupied_.push_back(true);
                return;
            }
            if (!occupied_[k]) {
                levels_[k] = std::move(v);
                occupied_[k] = true;
                return;
            }
            v += levels_[k];
            levels_[k] = 0;
            occupied_[k] = false;
        }
    }

    mpq_class total() const {
        mpq_class sum = 0;
        for (std::size_t k = 0; k < levels_.size(); ++k)
            if (occupied_[k]) sum += levels_[k];
        return sum;
    }

private:
    std::vector<mpq_class> levels_;
    std::vector<bool> occupied_;
};

// A(n) for all n <= x via a smallest-prime-factor sieve.
std::vector<mpq_class> mean_exponent_values(std::uint64_t x) {
    if (x > (1u << 26)) throw std::length_error("partial-sum bound exceeds configured limit");
    auto spf = smallest_prime_factor_table(static_cast<std::uint32_t>(x));
    std::vector<mpq_class> a(x + 1);
    a[1] = 1;
    for (std::uint64_t n = 2; n <= x; ++n) {
        std::uint64_t rem = n;
        mpq_class value = 1;
        while (rem > 1) {
            std::uint64_t p = spf[rem];
            std::uint64_t pk = 1;
            int e = 0;
            while (rem % p == 0) {
                rem /= p;
                pk *= p;
                ++e;
            }
            if (pk == n) {  // prime power: closed form, no recursion
                mpz_class pz(static_cast<unsigned long>(p));
                mpz_class p_nu1;
                mpz_pow_ui(p_nu1.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(e + 1));
                mpz_class num = (p_nu1 - 1) * (p_nu1 - 1);
                mpz_class den = p_nu1 * pz + p_nu1 - (2 * e + 3) * pz + 2 * e + 1;
                value = mpq_class(num, den);
                value.canonicalize();
            } else {
                value *= a[pk];  // pk < n, already computed
            }
        }
        a[n] = std::move(value);
    }
    return a;
}

}  // namespace

mpq_class partial_sum_f(std::uint64_t x) {
    if (x == 0) throw std::invalid_argument("x must be positive");
    auto a = mean_exponent_values(x);
    RationalAccumulator acc;
    for (std::uint64_t n = 1; n <= x; ++n) {
        mpq_class f = a[n] / mpq_class(static_cast<unsigned long>(n));
        f.canonicalize();
        acc.add(std::move(f));
    }
    return acc.total();
}

mpq_class partial_sum_A(std::uint64_t x) {
    if (x == 0) throw std::invalid_argument("x must be positive");
    auto a = mean_exponent_values(x);
    RationalAccumulator acc;
    for (std::uint64_t n = 1; n <= x; ++n) acc.add(a[n]);
    return acc.total();
}

std::vector<AsymptoticRow> asymptotic_report(const std::vector<std::uint64_t>& x_values,
                                             std::uint64_t prime_limit) {
    std::vector<AsymptoticRow> rows;
    if (x_values.empty()) return rows;
    for (std::size_t i = 1; i < x_values.size(); ++i)
        if (x_values[i] < x_values[i - 1])
            throw std::invalid_argument("x values must be ascending");
    double m = mean_value_M(prime_limit).value;
    auto a = mean_exponent_values(x_values.back());
    RationalAccumulator acc;
    std::uint64_t n = 1;
    for (std::uint64_t x : x_values) {
        for (; n <= x; ++n) acc.add(a[n]);
        mpq_class sum = acc.total();
        double x_d = static_cast<double>(x);
        double prediction = 0.5 * m * x_d * x_d;
        rows.push_back({x, sum, prediction, sum.get_d() / prediction});
    }
    return rows;
}

std::string asymptotic_report_csv(const std::vector<AsymptoticRow>& rows) {
    std::ostringstream out;
    out << "x,sum_A,prediction,ratio\n";
    out.precision(15);
    for (const auto& row : rows)
        out << row.x << ',' << row.sum_A << ',' << row.prediction << ',' << row.ratio << '\n';
    return out.str();
}

}  // namespace subexp
