#pragma once

#include <string>
#include <vector>

namespace hurwitz {

/// Partition of a positive integer; entries stored non-increasing, all >= 1.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// (part, part, ..., part) with `count` copies.
    static Partition repeated(int part, int count);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int sum() const;
    long long lcm() const;
    /// Number of entries different from lcm().
    int defect() const;
    int max_part() const { return parts_.empty() ? 0 : parts_.front(); }
    bool has_entry_above_one() const { return max_part() > 1; }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    /// Lexicographic on the non-increasing entry lists.
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_string() const;  // "(5,1,1,1)"

private:
    std::vector<int> parts_;
};

struct PartitionStats {
    int sum = 0;
    int length = 0;
    long long lcm = 1;
    int defect = 0;
};

PartitionStats partition_stats(const Partition& p);

}  // namespace hurwitz
