#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "subexp/arith.hpp"
#include "subexp/asymptotics.hpp"
#include "subexp/oracle.hpp"
#include "subexp/partition.hpp"
#include "subexp/pgroup.hpp"
#include "subexp/polyring.hpp"
#include "subexp/rank2.hpp"

using json = nlohmann::json;
using namespace subexp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

constexpr std::uint64_t kDefaultModulusLimit = 1'000'000;
constexpr std::uint64_t kDefaultXLimit = 1'000'000;

json poly_json(const IntPoly& poly) {
    json coeffs = json::array();
    for (const auto& c : poly.coeffs()) coeffs.push_back(c.get_str());
    return coeffs;
}

void check_modulus(std::uint64_t v, std::uint64_t limit) {
    if (v == 0 || v > limit) throw std::domain_error("modulus out of configured range");
}

struct Options {
    std::string format = "text";
};

int cmd_count_ptype(const std::string& lambda_str, int i, std::uint64_t p, const Options& opt) {
    Partition lambda = Partition::parse(lambda_str);
    IntPoly count = count_exponent(lambda, i);
    if (opt.format == "json") {
        json out{{"lambda", lambda.to_string()}, {"i", i}, {"poly", poly_json(count)},
                 {"text", count.to_string()}};
        if (p) out["value"] = count.eval(mpz_class(static_cast<unsigned long>(p))).get_str();
        std::cout << out.dump() << "\n";
    } else if (p) {
        std::cout << count.eval(mpz_class(static_cast<unsigned long>(p))).get_str() << "\n";
    } else {
        std::cout << count.to_string() << "\n";
    }
    return kExitOk;
}

int cmd_profile(const std::string& lambda_str, std::uint64_t p, const Options& opt) {
    Partition lambda = Partition::parse(lambda_str);
    ExponentProfile profile = exponent_profile(lambda);
    if (opt.format == "json") {
        json counts = json::array();
        for (const auto& c : profile.counts) {
            json entry{{"poly", poly_json(c)}, {"text", c.to_string()}};
            if (p) entry["value"] = c.eval(mpz_class(static_cast<unsigned long>(p))).get_str();
            counts.push_back(entry);
        }
        std::cout << json{{"lambda", lambda.to_string()}, {"counts", counts}}.dump() << "\n";
    } else {
        for (std::size_t i = 0; i < profile.counts.size(); ++i) {
            std::cout << "i=" << i << ": ";
            if (p)
                std::cout << profile.counts[i].eval(mpz_class(static_cast<unsigned long>(p))).get_str();
            else
                std::cout << profile.counts[i].to_string();
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int cmd_total(const std::string& lambda_str, std::uint64_t m, std::uint64_t n,
              std::uint64_t p, const Options& opt) {
    if (!lambda_str.empty()) {
        Partition lambda = Partition::parse(lambda_str);
        IntPoly total = exponent_profile(lambda).total();
        if (opt.format == "json") {
            json out{{"lambda", lambda.to_string()}, {"poly", poly_json(total)},
                     {"text", total.to_string()}};
            if (p) out["value"] = total.eval(mpz_class(static_cast<unsigned long>(p))).get_str();
            std::cout << out.dump() << "\n";
        } else if (p) {
            std::cout << total.eval(mpz_class(static_cast<unsigned long>(p))).get_str() << "\n";
        } else {
            std::cout << total.to_string() << "\n";
        }
        return kExitOk;
    }
    if (m == 0 || n == 0) {
        std::cerr << "usage: total requires --lambda or both --m and --n\n";
        return kExitUsage;
    }
    check_modulus(m, kDefaultModulusLimit);
    check_modulus(n, kDefaultModulusLimit);
    mpz_class total = total_mn(m, n);
    if (opt.format == "json")
        std::cout << json{{"m", m}, {"n", n}, {"total", total.get_str()}}.dump() << "\n";
    else
        std::cout << total.get_str() << "\n";
    return kExitOk;
}

int cmd_count_mn(std::uint64_t m, std::uint64_t n, std::uint64_t e, const Options& opt) {
    check_modulus(m, kDefaultModulusLimit);
    check_modulus(n, kDefaultModulusLimit);
    mpz_class count = count_exponent_mn(m, n, e);
    if (opt.format == "json")
        std::cout << json{{"m", m}, {"n", n}, {"e", e}, {"count", count.get_str()}}.dump() << "\n";
    else
        std::cout << count.get_str() << "\n";
    return kExitOk;
}

int cmd_dist(std::uint64_t m, std::uint64_t n, const Options& opt) {
    check_modulus(m, kDefaultModulusLimit);
    check_modulus(n, kDefaultModulusLimit);
    ExponentDistribution dist = exponent_distribution(m, n);
    mpz_class total = 0;
    for (const auto& [e, count] : dist) total += count;
    if (opt.format == "json") {
        json by_exponent = json::object();
        for (const auto& [e, count] : dist) by_exponent[std::to_string(e)] = count.get_str();
        std::cout << json{{"m", m}, {"n", n}, {"total", total.get_str()},
                          {"by_exponent", by_exponent}}.dump()
                  << "\n";
    } else if (opt.format == "csv") {
        std::cout << "exponent,count\n";
        for (const auto& [e, count] : dist) std::cout << e << ',' << count.get_str() << "\n";
    } else {
        for (const auto& [e, count] : dist)
            std::cout << e << ": " << count.get_str() << "\n";
        std::cout << "total: " << total.get_str() << "\n";
    }
    return kExitOk;
}

int cmd_enumerate(std::uint64_t m, std::uint64_t n, bool with_elements, const Options& opt) {
    check_modulus(m, 4096);
    check_modulus(n, 4096);
    auto keys = enumerate_keys(m, n);
    if (opt.format == "json") {
        json out = json::array();
        for (const auto& key : keys) {
            auto inv = key_invariants(key);
            json entry{{"a", key.a}, {"b", key.b}, {"c", key.c}, {"d", key.d}, {"l", key.l},
                       {"order", inv.order}, {"exponent", inv.exponent},
                       {"type", {inv.type.first, inv.type.second}}};
            if (with_elements) {
                json elems = json::array();
                for (const auto& [x, y] : materialize(key, m, n)) elems.push_back({x, y});
                entry["elements"] = elems;
            }
            out.push_back(entry);
        }
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& key : keys) {
            auto inv = key_invariants(key);
            std::cout << "(" << key.a << "," << key.b << "," << key.c << "," << key.d << ","
                      << key.l << ") order=" << inv.order << " exponent=" << inv.exponent
                      << " type=(" << inv.type.first << "," << inv.type.second << ")";
            if (with_elements) {
                std::cout << " elements=";
                bool first = true;
                for (const auto& [x, y] : materialize(key, m, n)) {
                    std::cout << (first ? "{" : " ") << "(" << x << "," << y << ")";
                    first = false;
                }
                std::cout << "}";
            }
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int cmd_sum_exponents(std::uint64_t m, std::uint64_t n, const Options& opt) {
    check_modulus(m, kDefaultModulusLimit);
    check_modulus(n, kDefaultModulusLimit);
    mpz_class sum = sum_of_exponents(m, n);
    if (opt.format == "json")
        std::cout << json{{"m", m}, {"n", n}, {"sum", sum.get_str()}}.dump() << "\n";
    else
        std::cout << sum.get_str() << "\n";
    return kExitOk;
}

int cmd_mean_exponent(std::uint64_t n, const Options& opt) {
    check_modulus(n, kDefaultModulusLimit);
    mpq_class a = mean_exponent_A(n);
    std::string text = a.get_num().get_str() + "/" + a.get_den().get_str();
    if (opt.format == "json")
        std::cout << json{{"n", n}, {"numerator", a.get_num().get_str()},
                          {"denominator", a.get_den().get_str()}}.dump()
                  << "\n";
    else
        std::cout << text << "\n";
    return kExitOk;
}

int cmd_asymptotic(std::uint64_t x_max, std::uint64_t prime_limit, const Options&) {
    if (x_max == 0 || x_max > kDefaultXLimit)
        throw std::domain_error("x-max out of configured range");
    std::vector<std::uint64_t> xs;
    for (std::uint64_t x = 10; x < x_max; x *= 10) xs.push_back(x);
    xs.push_back(x_max);
    std::cout << asymptotic_report_csv(asymptotic_report(xs, prime_limit));
    return kExitOk;
}

int cmd_iso(const std::string& lambda_str, const std::string& kappa_str, std::uint64_t p,
            const Options& opt) {
    Partition lambda = Partition::parse(lambda_str);
    Partition kappa = Partition::parse(kappa_str);
    bool iso = profiles_isomorphic(lambda, kappa, mpz_class(static_cast<unsigned long>(p)));
    if (opt.format == "json")
        std::cout << json{{"lambda", lambda.to_string()}, {"kappa", kappa.to_string()},
                          {"p", p}, {"isomorphic", iso}}.dump()
                  << "\n";
    else
        std::cout << (iso ? "isomorphic" : "not isomorphic") << "\n";
    return kExitOk;
}

bool verify_rank2(std::uint64_t max_order, std::ostream& log) {
    bool ok = true;
    for (std::uint64_t m = 1; m <= max_order; ++m) {
        for (std::uint64_t n = 1; m * n <= max_order; ++n) {
            AbelianGroupTable g{{m, n}};
            auto brute = oracle_distribution(g);
            auto formula = exponent_distribution(m, n);
            std::map<std::uint64_t, mpz_class> brute_z(brute.begin(), brute.end());
            if (brute_z != formula) {
                log << "mismatch: distribution of Z_" << m << " x Z_" << n << "\n";
                ok = false;
            }
            if (total_mn(m, n) != mpz_class(static_cast<unsigned long>(enumerate_keys(m, n).size()))) {
                log << "mismatch: key count for Z_" << m << " x Z_" << n << "\n";
                ok = false;
            }
        }
    }
    return ok;
}

bool verify_rank3(std::ostream& log) {
    bool ok = true;
    struct Case {
        std::uint64_t p;
        std::vector<int> lambda;
    };
    std::vector<Case> cases;
    for (std::uint64_t p : {2, 3}) {
        std::uint64_t bound = (p == 2) ? 64 : 81;
        for (int l1 = 1; l1 <= 6; ++l1)
            for (int l2 = 0; l2 <= l1; ++l2)
                for (int l3 = 0; l3 <= l2; ++l3) {
                    double order = std::pow(static_cast<double>(p), l1 + l2 + l3);
                    if (order <= static_cast<double>(bound))
                        cases.push_back({p, {l1, l2, l3}});
                }
    }
    for (const auto& c : cases) {
        std::vector<std::uint64_t> moduli;
        std::vector<int> parts;
        for (int e : c.lambda)
            if (e > 0) {
                std::uint64_t pe = 1;
                for (int k = 0; k < e; ++k) pe *= c.p;
                moduli.push_back(pe);
                parts.push_back(e);
            }
        if (moduli.empty()) continue;
        Partition lambda(parts);
        AbelianGroupTable g{moduli};
        auto brute = oracle_distribution(g);
        for (int i = 0; i <= lambda.first(); ++i) {
            std::uint64_t pe = 1;
            for (int k = 0; k < i; ++k) pe *= c.p;
            mpz_class expected = count_exponent(lambda, i).eval(mpz_class(static_cast<unsigned long>(c.p)));
            std::uint64_t actual = brute.count(pe) ? brute.at(pe) : 0;
            if (expected != mpz_class(static_cast<unsigned long>(actual))) {
                log << "mismatch: lambda=" << lambda.to_string() << " p=" << c.p << " i=" << i
                    << "\n";
                ok = false;
            }
        }
    }
    return ok;
}

bool verify_asym(std::ostream& log) {
    bool ok = true;
    for (std::uint64_t n = 1; n <= 500; ++n) {
        mpq_class f = mean_exponent_f(n);
        mpq_class sum = 0;
        for (std::uint64_t d : divisors(n)) sum += g_multiplicative(d);
        if (sum != f) {
            log << "mismatch: mobius relation at n=" << n << "\n";
            ok = false;
        }
        if (s_nn(n) != total_mn(n, n)) {
            log << "mismatch: s(n) vs s(n,n) at n=" << n << "\n";
            ok = false;
        }
    }
    return ok;
}

int cmd_verify(const std::string& suite, std::uint64_t max_order) {
    if (max_order == 0 || max_order > 4096)
        throw std::domain_error("max-order out of configured range");
    bool ok = true;
    if (suite == "rank2" || suite == "all") ok = verify_rank2(max_order, std::cerr) && ok;
    if (suite == "rank3" || suite == "all") ok = verify_rank3(std::cerr) && ok;
    if (suite == "asym" || suite == "all") ok = verify_asym(std::cerr) && ok;
    std::cout << (ok ? "verify: ok" : "verify: FAILED") << "\n";
    return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact subgroup counting for finite abelian groups"};
    app.require_subcommand(1);
    Options opt;
    if (const char* env = std::getenv("SUBEXP_FORMAT")) opt.format = env;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    std::string lambda_str, kappa_str, suite = "all";
    std::uint64_t m = 0, n = 0, e = 0, p = 0, x_max = 10000, prime_limit = 100000,
                  max_order = 256;
    int i = 0;
    bool with_elements = false;

    auto* count_ptype = app.add_subcommand("count-ptype", "Subgroups of exponent p^i in a p-group");
    count_ptype->add_option("--lambda", lambda_str)->required();
    count_ptype->add_option("--i", i)->required();
    count_ptype->add_option("--p", p);

    auto* profile = app.add_subcommand("profile", "Full exponent profile of a p-group type");
    profile->add_option("--lambda", lambda_str)->required();
    profile->add_option("--p", p);

    auto* total = app.add_subcommand("total", "Total number of subgroups");
    total->add_option("--lambda", lambda_str);
    total->add_option("--m", m);
    total->add_option("--n", n);
    total->add_option("--p", p);

    auto* count = app.add_subcommand("count", "Subgroups of Z_m x Z_n with exponent E");
    count->add_option("--m", m)->required();
    count->add_option("--n", n)->required();
    count->add_option("--e", e)->required();

    auto* dist = app.add_subcommand("dist", "Exponent distribution for Z_m x Z_n");
    dist->add_option("--m", m)->required();
    dist->add_option("--n", n)->required();

    auto* enumerate = app.add_subcommand("enumerate", "Subgroup keys of Z_m x Z_n");
    enumerate->add_option("--m", m)->required();
    enumerate->add_option("--n", n)->required();
    enumerate->add_flag("--elements", with_elements);

    auto* sum_exp = app.add_subcommand("sum-exponents", "Sum of subgroup exponents of Z_m x Z_n");
    sum_exp->add_option("--m", m)->required();
    sum_exp->add_option("--n", n)->required();

    auto* mean_exp = app.add_subcommand("mean-exponent", "Mean subgroup exponent of Z_n x Z_n");
    mean_exp->add_option("--n", n)->required();

    auto* asym = app.add_subcommand("asymptotic", "Partial sums of A(n) against (M/2) x^2");
    asym->add_option("--x-max", x_max);
    asym->add_option("--prime-limit", prime_limit);

    auto* iso = app.add_subcommand("iso", "Compare exponent profiles of two p-group types");
    iso->add_option("--lambda", lambda_str)->required();
    iso->add_option("--kappa", kappa_str)->required();
    iso->add_option("--p", p)->required();

    auto* verify = app.add_subcommand("verify", "Cross-check formulas against the brute-force oracle");
    verify->add_option("--suite", suite)->check(CLI::IsMember({"rank2", "rank3", "asym", "all"}));
    verify->add_option("--max-order", max_order);

    // let the global --format flag appear after the subcommand
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::ParseError& ex) {
        app.exit(ex);
        return kExitUsage;
    }

    try {
        if (count_ptype->parsed()) return cmd_count_ptype(lambda_str, i, p, opt);
        if (profile->parsed()) return cmd_profile(lambda_str, p, opt);
        if (total->parsed()) return cmd_total(lambda_str, m, n, p, opt);
        if (count->parsed()) return cmd_count_mn(m, n, e, opt);
        if (dist->parsed()) return cmd_dist(m, n, opt);
        if (enumerate->parsed()) return cmd_enumerate(m, n, with_elements, opt);
        if (sum_exp->parsed()) return cmd_sum_exponents(m, n, opt);
        if (mean_exp->parsed()) return cmd_mean_exponent(n, opt);
        if (asym->parsed()) return cmd_asymptotic(x_max, prime_limit, opt);
        if (iso->parsed()) return cmd_iso(lambda_str, kappa_str, p, opt);
        if (verify->parsed()) return cmd_verify(suite, max_order);
    } catch (const std::domain_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitDomain;
    } catch (const std::length_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
