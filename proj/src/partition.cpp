#include "superinv/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "superinv/errors.hpp"

namespace superinv {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0)
            throw Error(ErrorKind::Domain, "partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition operator+(const Partition& a, const Partition& b) {
    std::vector<int> out(a.parts_);
    out.insert(out.end(), b.parts_.begin(), b.parts_.end());
    return Partition(std::move(out));
}

namespace {
void build(int left, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (left == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
        cur.push_back(p);
        build(left - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    build(n, n, cur, out);
    return out;
}

}  // namespace superinv
