#include "virfusion/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace virfusion {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int p : parts_)
        if (p <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::tail() const
{
    return Partition(Trusted{}, std::vector<int>(parts_.begin() + 1, parts_.end()), total_ - parts_.front());
}

Partition Partition::prepend(int part) const
{
    std::vector<int> p;
    p.reserve(parts_.size() + 1);
    p.push_back(part);
    p.insert(p.end(), parts_.begin(), parts_.end());
    return Partition(Trusted{}, std::move(p), total_ + part);
}

std::string Partition::to_string() const
{
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

namespace {

void fill(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int a = std::min(remaining, max_part); a >= 1; --a) {
        prefix.push_back(a);
        fill(remaining - a, a, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 0)
        throw std::invalid_argument("enumerate_partitions: n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    fill(n, n, prefix, out);
    return out;
}

} // namespace virfusion
