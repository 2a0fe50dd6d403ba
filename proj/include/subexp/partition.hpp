#pragma once

#include <string>
#include <vector>

namespace subexp {

/**
 * An integer partition: a weakly decreasing sequence of positive parts.
 * Trailing zeros are stripped at construction, so every partition has one
 * canonical form; the empty sequence is the zero partition.
 *
 * Partitions encode abelian p-group types: (4,2) stands for
 * Z_{p^4} x Z_{p^2}.
 */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition parse(const std::string& dotted);  // "4.2.2", "0" = empty

    const std::vector<int>& parts() const { return parts_; }
    int rank() const { return static_cast<int>(parts_.size()); }
    int first() const { return parts_.empty() ? 0 : parts_.front(); }
    int part(int j) const;   // parts_[j], 0 when out of range
    int weight() const;      // sum of parts

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;  // "4.2.2", empty renders as "0"

private:
    std::vector<int> parts_;
};

/// Conjugate partition: result[i-1] = #{j : parts[j] >= i}. An involution.
Partition conjugate(const Partition& lambda);

/// Componentwise containment mu_i <= lambda_i (missing parts read as 0).
bool contains(const Partition& lambda, const Partition& mu);

/// All mu with mu <= lambda and mu_1 = i, each once, in increasing
/// lexicographic order. i = 0 yields only the zero partition; i > lambda_1
/// yields nothing.
std::vector<Partition> subpartitions_with_first_part(const Partition& lambda, int i);

/// All mu with mu <= lambda (every sub-partition, any first part).
std::vector<Partition> subpartitions(const Partition& lambda);

/// All partitions of weight n (used by property tests and the iso check).
std::vector<Partition> partitions_of_weight(int n);

}  // namespace subexp
