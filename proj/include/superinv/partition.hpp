#pragma once

#include <compare>
#include <vector>

namespace superinv {

// Weakly decreasing positive parts; the empty partition is allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // sorts, rejects non-positive parts

    const std::vector<int>& parts() const { return parts_; }
    int size() const;  // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }

    // Multiset union (product of power sums).
    friend Partition operator+(const Partition& a, const Partition& b);

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

std::vector<Partition> partitions_of(int n);

}  // namespace superinv
