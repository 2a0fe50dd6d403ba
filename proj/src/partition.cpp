#include "subexp/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace subexp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        if (parts_[j] < 0) throw std::invalid_argument("partition part must be nonnegative");
        if (j > 0 && parts_[j] > parts_[j - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        if (parts_[j] == 0) throw std::invalid_argument("interior zero part in partition");
    }
}

Partition Partition::parse(const std::string& dotted) {
    if (dotted.empty() || dotted == "0") return Partition{};
    std::vector<int> parts;
    std::stringstream ss(dotted);
    std::string tok;
    while (std::getline(ss, tok, '.')) {
        if (tok.empty()) throw std::invalid_argument("empty component in partition string");
        parts.push_back(std::stoi(tok));
    }
    return Partition(std::move(parts));
}

int Partition::part(int j) const {
    return (j >= 0 && j < rank()) ? parts_[j] : 0;
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        if (j) out += '.';
        out += std::to_string(parts_[j]);
    }
    return out;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> out;
    for (int i = 1; i <= lambda.first(); ++i) {
        int count = 0;
        for (int part : lambda.parts())
            if (part >= i) ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

bool contains(const Partition& lambda, const Partition& mu) {
    for (int j = 0; j < mu.rank(); ++j)
        if (mu.part(j) > lambda.part(j)) return false;
    return true;
}

namespace {

void extend(const Partition& lambda, std::vector<int>& prefix, int depth,
            std::vector<Partition>& out) {
    out.emplace_back(prefix);
    if (depth >= lambda.rank()) return;
    int cap = std::min(prefix.empty() ? lambda.first() : prefix.back(), lambda.part(depth));
    for (int v = 1; v <= cap; ++v) {
        prefix.push_back(v);
        extend(lambda, prefix, depth + 1, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> subpartitions_with_first_part(const Partition& lambda, int i) {
    if (i < 0) throw std::invalid_argument("first part must be nonnegative");
    std::vector<Partition> out;
    if (i == 0) {
        out.emplace_back();
        return out;
    }
    if (i > lambda.first()) return out;
    std::vector<int> prefix{i};
    extend(lambda, prefix, 1, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
    std::vector<Partition> out;
    for (int i = 0; i <= lambda.first(); ++i) {
        auto batch = subpartitions_with_first_part(lambda, i);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

namespace {

void build_weight(int remaining, int cap, std::vector<int>& prefix,
                  std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int v = std::min(cap, remaining); v >= 1; --v) {
        prefix.push_back(v);
        build_weight(remaining - v, v, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of_weight(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> prefix;
    build_weight(n, n, prefix, out);
    return out;
}

}  // namespace subexp
