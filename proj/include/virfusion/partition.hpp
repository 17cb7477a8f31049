#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace virfusion {

// Integer partition with parts in non-increasing order. Read as the PBW word
// L_{-parts[0]} L_{-parts[1]} ... so the most negative mode is leftmost.
class Partition {
public:
    Partition() = default;
    // Parts are sorted into non-increasing order; non-positive parts are rejected.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // p = (1^n)
    static Partition ones(int n) { return Partition(std::vector<int>(static_cast<size_t>(n), 1)); }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return total_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int leading() const { return parts_.front(); }

    // Drops the leading (largest) part.
    Partition tail() const;
    // Prepends a part that is >= every existing part.
    Partition prepend(int part) const;

    std::string to_string() const;

    // Reverse-lexicographic: the larger part sequence sorts first. This is the
    // canonical order of enumerate_partitions and of serialized term lists.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return b.parts_ <=> a.parts_;
    }
    friend bool operator==(const Partition& a, const Partition& b) = default;

private:
    struct Trusted {};
    Partition(Trusted, std::vector<int> parts, int total) : parts_(std::move(parts)), total_(total) {}

    std::vector<int> parts_;
    int total_ = 0;
};

// All partitions of n in reverse-lexicographic order, e.g. 4 -> [4],[3,1],[2,2],[2,1,1],[1,1,1,1].
std::vector<Partition> enumerate_partitions(int n);

} // namespace virfusion
