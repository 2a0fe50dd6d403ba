#include "subexp/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "subexp/arith.hpp"

namespace subexp {

std::uint64_t AbelianGroupTable::order() const {
    std::uint64_t n = 1;
    for (std::uint64_t m : moduli) {
        if (m == 0) throw std::invalid_argument("zero modulus");
        n *= m;
    }
    return n;
}

namespace {

using Index = std::uint32_t;

std::vector<std::uint64_t> decode(Index idx, const AbelianGroupTable& g) {
    std::vector<std::uint64_t> coords(g.moduli.size());
    for (std::size_t j = g.moduli.size(); j-- > 0;) {
        coords[j] = idx % g.moduli[j];
        idx = static_cast<Index>(idx / g.moduli[j]);
    }
    return coords;
}

Index encode(const std::vector<std::uint64_t>& coords, const AbelianGroupTable& g) {
    Index idx = 0;
    for (std::size_t j = 0; j < g.moduli.size(); ++j)
        idx = static_cast<Index>(idx * g.moduli[j] + coords[j] % g.moduli[j]);
    return idx;
}

Index add_index(Index x, Index y, const AbelianGroupTable& g) {
    Index out = 0;
    // Work from the least significant coordinate upward.
    std::uint64_t place = 1;
    for (std::size_t j = g.moduli.size(); j-- > 0;) {
        std::uint64_t m = g.moduli[j];
        std::uint64_t xc = (x / place) % m;
        std::uint64_t yc = (y / place) % m;
        out = static_cast<Index>(out + ((xc + yc) % m) * place);
        place *= m;
    }
    return out;
}

// Precomputed addition table; the exhaustive tuple sweep performs O(n^2)
// closures, so the O(n^2) table pays for itself immediately.
class AdditionTable {
public:
    explicit AdditionTable(const AbelianGroupTable& g) : n_(g.order()) {
        table_.resize(n_ * n_);
        for (std::uint64_t x = 0; x < n_; ++x)
            for (std::uint64_t y = 0; y <= x; ++y) {
                Index s = add_index(static_cast<Index>(x), static_cast<Index>(y), g);
                table_[x * n_ + y] = s;
                table_[y * n_ + x] = s;
            }
    }

    Index add(Index x, Index y) const { return table_[static_cast<std::uint64_t>(x) * n_ + y]; }

private:
    std::uint64_t n_;
    std::vector<Index> table_;
};

// Sorted element indices of the subgroup generated by gens. Add is any
// callable computing the group operation on indices.
template <typename Add>
std::vector<Index> closure_indices(const std::vector<Index>& gens, std::uint64_t n, Add add) {
    std::vector<bool> member(n, false);
    std::vector<Index> elements{0};
    member[0] = true;
    for (Index gen : gens) {
        // Extend by all multiples of gen added to what we have so far. The
        // set before this step is a subgroup S, so when a multiple already
        // lies in the current union of cosets, its whole coset S + shift
        // does too and the pass can be skipped.
        std::size_t base = elements.size();
        for (Index shift = gen; shift != 0; shift = add(shift, gen)) {
            if (member[shift]) continue;
            for (std::size_t i = 0; i < base; ++i) {
                Index e = add(elements[i], shift);
                if (!member[e]) {
                    member[e] = true;
                    elements.push_back(e);
                }
            }
        }
    }
    std::sort(elements.begin(), elements.end());
    return elements;
}

// Closure state grown one generator at a time so that the tuple sweep can
// reuse the partial closure shared by all tuples with a common prefix.
// `hash` is an order-independent fingerprint (sum of mixed element hashes)
// used to recognise subgroups without sorting every closure.
struct ClosureState {
    std::vector<char> member;
    std::vector<Index> elements;
    std::uint64_t hash = 0;
};

std::uint64_t mix_index(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void extend_closure(ClosureState& s, Index gen, const AdditionTable& table) {
    std::size_t base = s.elements.size();
    for (Index shift = gen; shift != 0; shift = table.add(shift, gen)) {
        // The set before this generator is a subgroup S; if a multiple of
        // gen is already present, so is the whole coset S + shift.
        if (s.member[shift]) continue;
        for (std::size_t i = 0; i < base; ++i) {
            Index e = table.add(s.elements[i], shift);
            if (!s.member[e]) {
                s.member[e] = 1;
                s.elements.push_back(e);
                s.hash += mix_index(e);
            }
        }
    }
}

SubgroupSet decode_set(const std::vector<Index>& indices, const AbelianGroupTable& g) {
    SubgroupSet out;
    out.reserve(indices.size());
    for (Index idx : indices) out.push_back(decode(idx, g));
    return out;
}

std::uint64_t element_order(const std::vector<std::uint64_t>& coords, const AbelianGroupTable& g) {
    std::uint64_t order = 1;
    for (std::size_t j = 0; j < coords.size(); ++j)
        order = lcm_u64(order, g.moduli[j] / gcd_u64(coords[j], g.moduli[j]));
    return order;
}

std::uint64_t default_bound(int rank) {
    if (rank <= 2) return 4096;
    if (rank == 3) return 729;
    return 512;
}

}  // namespace

SubgroupSet closure(const std::vector<std::vector<std::uint64_t>>& generators,
                    const AbelianGroupTable& g) {
    std::vector<Index> gens;
    gens.reserve(generators.size());
    for (const auto& coords : generators) {
        if (coords.size() != g.moduli.size())
            throw std::invalid_argument("generator arity does not match group rank");
        gens.push_back(encode(coords, g));
    }
    auto add = [&g](Index x, Index y) { return add_index(x, y, g); };
    return decode_set(closure_indices(gens, g.order(), add), g);
}

std::set<SubgroupSet> all_subgroups(const AbelianGroupTable& g, std::uint64_t max_order) {
    std::uint64_t n = g.order();
    std::uint64_t bound = max_order ? max_order : default_bound(g.rank());
    if (n > bound) throw std::length_error("group order exceeds oracle bound");

    std::size_t r = static_cast<std::size_t>(std::max(g.rank(), 1));
    AdditionTable table(g);

    // Dedup keyed on the order-independent hash; sorted element lists are
    // kept per key so hash collisions still compare set contents exactly.
    std::map<std::pair<std::uint64_t, std::size_t>, std::vector<std::vector<Index>>> found;
    auto record = [&found](const ClosureState& s) {
        auto& bucket = found[{s.hash, s.elements.size()}];
        std::vector<Index> sorted = s.elements;
        std::sort(sorted.begin(), sorted.end());
        for (const auto& existing : bucket)
            if (existing == sorted) return;
        bucket.push_back(std::move(sorted));
    };

    // Extending a closure by a generator g only ever walks the multiples of
    // g, so the result depends on g through the cyclic subgroup it spans.
    // Label every element with its cyclic subgroup so the sweep can skip
    // tuple entries that would repeat an extension already performed.
    std::map<std::vector<Index>, int> cyclic_ids;
    std::vector<int> cid(n, -1);
    for (Index e = 0; e < n; ++e) {
        std::vector<Index> multiples{0};
        for (Index x = e; x != 0; x = table.add(x, e)) multiples.push_back(x);
        std::sort(multiples.begin(), multiples.end());
        auto [it, inserted] =
            cyclic_ids.emplace(std::move(multiples), static_cast<int>(cyclic_ids.size()));
        cid[e] = it->second;
    }
    std::size_t num_cyclic = cyclic_ids.size();

    // Depth-first sweep over all r-tuples of elements; level k holds the
    // closure of the tuple prefix of length k, so siblings share the work of
    // closing their common prefix. Tuple entries spanning a cyclic subgroup
    // already used at this level with the same prefix lead to an identical
    // state and are skipped.
    std::vector<ClosureState> level(r + 1);
    level[0].member.assign(n, 0);
    level[0].member[0] = 1;
    level[0].elements = {0};
    auto sweep = [&](auto&& self, std::size_t pos) -> void {
        if (pos == r) {
            record(level[r]);
            return;
        }
        std::vector<char> used(num_cyclic, 0);
        for (Index e = 0; e < n; ++e) {
            int c = cid[e];
            if (used[static_cast<std::size_t>(c)]) continue;
            used[static_cast<std::size_t>(c)] = 1;
            level[pos + 1] = level[pos];
            extend_closure(level[pos + 1], e, table);
            self(self, pos + 1);
        }
    };
    sweep(sweep, 0);

    std::set<SubgroupSet> out;
    for (const auto& [key, bucket] : found) {
        (void)key;
        for (const auto& indices : bucket) out.insert(decode_set(indices, g));
    }
    return out;
}

std::uint64_t subgroup_exponent(const SubgroupSet& h, const AbelianGroupTable& g) {
    std::uint64_t exponent = 1;
    for (const auto& coords : h) exponent = lcm_u64(exponent, element_order(coords, g));
    return exponent;
}

std::vector<std::uint64_t> subgroup_type(const SubgroupSet& h, const AbelianGroupTable& g) {
    // Per prime p: the p-type mu is recovered from annihilator counts,
    // #{x in H : p^s x = 0} = p^{mu'_1 + ... + mu'_s}. Invariant factors
    // pair the largest parts across primes.
    std::uint64_t order = h.size();
    std::vector<std::vector<int>> prime_parts;  // descending parts per prime
    for (auto [p, e] : factor(order).factors) {
        (void)e;
        std::vector<int> conj;  // mu'_s values
        std::uint64_t prev = 1;
        for (std::uint64_t ps = p;; ps *= p) {
            std::uint64_t count = 0;
            for (const auto& coords : h) {
                bool killed = true;
                for (std::size_t j = 0; j < coords.size(); ++j)
                    if ((coords[j] * (ps % g.moduli[j])) % g.moduli[j] != 0) {
                        killed = false;
                        break;
                    }
                if (killed) ++count;
            }
            if (count == prev) break;
            int step = 0;
            for (std::uint64_t q = count / prev; q > 1; q /= p) ++step;
            conj.push_back(step);
            prev = count;
        }
        // Conjugate back to the partition itself.
        std::vector<int> parts;
        for (int i = 1; !conj.empty() && i <= conj.front(); ++i) {
            int cnt = 0;
            for (int c : conj)
                if (c >= i) ++cnt;
            parts.push_back(cnt);
        }
        prime_parts.push_back(std::move(parts));
    }

    std::size_t rank = static_cast<std::size_t>(std::max(g.rank(), 1));
    std::vector<std::uint64_t> invariants(rank, 1);  // ascending, largest last
    std::size_t prime_idx = 0;
    for (auto [p, e] : factor(order).factors) {
        (void)e;
        const auto& parts = prime_parts[prime_idx++];
        for (std::size_t i = 0; i < parts.size(); ++i) {
            std::uint64_t pk = 1;
            for (int k = 0; k < parts[i]; ++k) pk *= p;
            invariants[rank - 1 - i] *= pk;  // largest part with largest factor
        }
    }
    return invariants;
}

std::map<std::uint64_t, std::uint64_t> oracle_distribution(const AbelianGroupTable& g) {
    std::map<std::uint64_t, std::uint64_t> dist;
    for (const auto& h : all_subgroups(g)) ++dist[subgroup_exponent(h, g)];
    return dist;
}

std::uint64_t oracle_cyclic_count(const AbelianGroupTable& g) {
    std::uint64_t count = 0;
    for (const auto& h : all_subgroups(g))
        if (h.size() == subgroup_exponent(h, g)) ++count;
    return count;
}

}  // namespace subexp
