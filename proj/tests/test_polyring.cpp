#include <doctest.h>

#include "subexp/polyring.hpp"

using namespace subexp;

namespace {

mpz_class falling_product(const mpz_class& p, int m) {
    // prod_{i=1}^m (p^i - 1), empty product = 1
    mpz_class out = 1, pk = 1;
    for (int i = 1; i <= m; ++i) {
        pk *= p;
        out *= pk - 1;
    }
    return out;
}

mpz_class binomial(int n, int k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

}  // namespace

TEST_CASE("ring basics") {
    IntPoly p_plus_1({1, 1});
    CHECK(p_plus_1 + IntPoly{} == p_plus_1);
    CHECK(p_plus_1 * IntPoly({-1, 1}) == IntPoly({-1, 0, 1}));
    CHECK(shift(IntPoly{1}, 3) == IntPoly({0, 0, 0, 1}));
    CHECK((p_plus_1 - p_plus_1).is_zero());
}

TEST_CASE("evaluation") {
    CHECK(IntPoly({2, 2, 1}).eval(2) == 10);
    CHECK(IntPoly{}.eval(7) == 0);
    CHECK(IntPoly({7, 5, 3}).eval(3) == 49);
}

TEST_CASE("rendering") {
    CHECK(IntPoly({7, 5, 3}).to_string() == "3*p^2+5*p+7");
    CHECK(IntPoly({1, 1}).to_string() == "p+1");
    CHECK(IntPoly({-1, 0, 1}).to_string() == "p^2-1");
    CHECK(IntPoly{}.to_string() == "0");
}

TEST_CASE("gaussian binomial base cases and known values") {
    CHECK(gauss_binom(5, 0) == IntPoly{1});
    CHECK(gauss_binom(5, 5) == IntPoly{1});
    CHECK(gauss_binom(2, 1) == IntPoly({1, 1}));
    CHECK(gauss_binom(4, 2) == IntPoly({1, 1, 2, 1, 1}));
    CHECK(gauss_binom(3, -1).is_zero());
    CHECK(gauss_binom(3, 4).is_zero());
}

TEST_CASE("symmetry binom(n,k) = binom(n,n-k)") {
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) CHECK(gauss_binom(n, k) == gauss_binom(n, n - k));
}

TEST_CASE("gaussian Pascal recurrence") {
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(gauss_binom(n, k) == gauss_binom(n - 1, k - 1) + shift(gauss_binom(n - 1, k), k));
}

TEST_CASE("value at 1 is the ordinary binomial coefficient") {
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) CHECK(gauss_binom(n, k).eval(1) == binomial(n, k));
}

TEST_CASE("defining quotient of products holds at small primes") {
    for (mpz_class p : {2, 3, 5})
        for (int n = 0; n <= 10; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(gauss_binom(n, k).eval(p) * falling_product(p, k) *
                          falling_product(p, n - k) ==
                      falling_product(p, n));
}
