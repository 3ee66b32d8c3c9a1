#pragma once

#include <string>
#include <vector>

namespace chern {

/// Integer partition: a non-increasing list of positive parts. The canonical
/// total order (used everywhere partitions key a map) sorts by weight first,
/// then reverse-lexicographically, so for weight 3: [3], [2,1], [1,1,1].
class Partition {
public:
    Partition() = default;  // the empty partition of 0
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    std::size_t length() const { return parts_.size(); }

    Partition conjugate() const;

    /// "[2,1]"; "[]" for the empty partition.
    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) {
        if (a.weight_ != b.weight_) return a.weight_ < b.weight_;
        return b.parts_ < a.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// All partitions of n in canonical order. n = 0 yields the empty partition.
std::vector<Partition> partitions_of(int n);

}  // namespace chern
