#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace nilorb {

/// Weakly decreasing sequence of positive integers. Trailing zeros are
/// dropped on construction, so equality is structural.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const noexcept;

    /// 1-based access; indices past the end read as 0.
    int at(std::size_t i) const noexcept {
        return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
    }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    /// Distinct parts in decreasing order.
    std::vector<int> distinct() const;

    std::string str() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

struct Bipartition {
    Partition mu;
    Partition nu;

    int total() const noexcept { return mu.size() + nu.size(); }
    std::string str() const;
    auto operator<=>(const Bipartition&) const = default;
};

enum class Family { XC2, XB2, XC1, XB1 };

int multiplicity(const Partition& lambda, int j);

/// Partial-sum dominance on bipartitions of the same total.
bool bipartition_leq(const Bipartition& a, const Bipartition& b);

Bipartition j_induct(const Bipartition& tau, int k);

bool family_member(const Bipartition& tau, Family family);

/// Swap so that at the first index where mu and nu differ, nu is smaller.
Bipartition normalize_d(const Bipartition& tau);

/// All partitions of n, reverse-lexicographic (largest first).
std::vector<Partition> partitions_of(int n);

/// All bipartitions of total n: |mu| descending, then each factor in
/// reverse-lexicographic order.
std::vector<Bipartition> bipartitions_of(int n);

/// Build a partition from a multiplicity table m[j] (index j = part size).
Partition from_multiplicities(const std::vector<int>& mult);

/// Multiplicity table indexed by part size, sized largest()+1.
std::vector<int> multiplicities(const Partition& lambda);

}  // namespace nilorb
