#include "subexp/polyring.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace subexp {

IntPoly::IntPoly(long constant) {
    if (constant != 0) coeffs_.emplace_back(constant);
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::monomial(mpz_class c, int k) {
    if (k < 0) throw std::invalid_argument("negative monomial degree");
    std::vector<mpz_class> coeffs(static_cast<std::size_t>(k) + 1, mpz_class(0));
    coeffs.back() = std::move(c);
    return IntPoly(std::move(coeffs));
}

mpz_class IntPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), mpz_class(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), mpz_class(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly{};
    std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(out));
}

mpz_class IntPoly::eval(const mpz_class& p) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * p + *it;
    return acc;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const mpz_class& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        mpz_class abs_c = abs(c);
        if (out.empty()) {
            if (c < 0) out += '-';
        } else {
            out += (c < 0) ? "-" : "+";
        }
        bool need_coeff = (abs_c != 1) || (k == 0);
        if (need_coeff) out += abs_c.get_str();
        if (k > 0) {
            if (need_coeff) out += '*';
            out += 'p';
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

IntPoly shift(const IntPoly& a, int k) {
    if (k < 0) throw std::invalid_argument("negative shift");
    if (a.is_zero() || k == 0) return a;
    std::vector<mpz_class> out(static_cast<std::size_t>(k), mpz_class(0));
    out.insert(out.end(), a.coeffs().begin(), a.coeffs().end());
    return IntPoly(std::move(out));
}

IntPoly gauss_binom(int n, int k) {
    if (n < 0) throw std::invalid_argument("negative n in gaussian binomial");
    if (k < 0 || k > n) return IntPoly{};
    if (k == 0 || k == n) return IntPoly{1};

    static std::mutex mutex;
    static std::map<std::pair<int, int>, IntPoly> cache;
    std::lock_guard lock(mutex);
    auto key = std::pair{n, k};
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    // q-Pascal, recursion depth n; computed iteratively row by row.
    std::vector<IntPoly> prev{IntPoly{1}};  // row 0
    for (int row = 1; row <= n; ++row) {
        std::vector<IntPoly> cur(static_cast<std::size_t>(row) + 1);
        cur.front() = IntPoly{1};
        cur.back() = IntPoly{1};
        for (int j = 1; j < row; ++j)
            cur[static_cast<std::size_t>(j)] =
                prev[static_cast<std::size_t>(j - 1)] +
                shift(prev[static_cast<std::size_t>(j)], j);
        for (int j = 0; j <= row; ++j)
            cache.try_emplace({row, j}, cur[static_cast<std::size_t>(j)]);
        prev = std::move(cur);
    }
    return cache.at(key);
}

IntPoly geometric_sum(int e) {
    if (e < 0) return IntPoly{};
    return IntPoly(std::vector<mpz_class>(static_cast<std::size_t>(e) + 1, mpz_class(1)));
}

}  // namespace subexp
