#include "hurwitz/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hurwitz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("empty partition");
    for (int e : parts_)
        if (e < 1) throw std::invalid_argument("partition entry below 1");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

Partition Partition::repeated(int part, int count) {
    return Partition(std::vector<int>(static_cast<size_t>(count), part));
}

int Partition::sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

long long Partition::lcm() const {
    long long l = 1;
    for (int e : parts_) l = std::lcm(l, static_cast<long long>(e));
    return l;
}

int Partition::defect() const {
    long long l = lcm();
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                          [l](int e) { return e != l; }));
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ')';
    return out;
}

PartitionStats partition_stats(const Partition& p) {
    return {p.sum(), p.length(), p.lcm(), p.defect()};
}

}  // namespace hurwitz
