#include "chern/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace chern {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0) throw std::invalid_argument("Partition: parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(static_cast<std::size_t>(parts_.front()), 0);
    for (int part : parts_) {
        for (int i = 0; i < part; ++i) conj[static_cast<std::size_t>(i)] += 1;
    }
    return Partition(std::move(conj));
}

std::string Partition::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(parts_[i]);
    }
    out += "]";
    return out;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<int> current;
    // Descending first parts produce exactly the canonical order.
    std::function<void(int, int)> descend = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(Partition(current));
            return;
        }
        for (int part = std::min(max_part, remaining); part >= 1; --part) {
            current.push_back(part);
            descend(remaining - part, part);
            current.pop_back();
        }
    };
    descend(n, n);
    return out;
}

}  // namespace chern
