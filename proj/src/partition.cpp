#include "permlab/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace permlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (k > 0 && parts_[k] > parts_[k - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::all_ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

Partition Partition::balanced(int n, int max_parts) {
    if (max_parts < 1) throw std::invalid_argument("balanced: max_parts must be >= 1");
    const int t = std::min(n, max_parts);
    std::vector<int> parts(static_cast<std::size_t>(t), n / t);
    for (int k = 0; k < n % t; ++k) parts[static_cast<std::size_t>(k)] += 1;
    return Partition(std::move(parts));
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> alpha(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_) alpha[static_cast<std::size_t>(p) - 1] += 1;
    return alpha;
}

Partition cycle_type(const Permutation& p) {
    auto cycles = cycles_of(p);
    std::vector<int> lens;
    lens.reserve(cycles.size());
    for (const auto& c : cycles) lens.push_back(static_cast<int>(c.size()));
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
}

std::uint64_t conjugacy_class_size(const Partition& lambda) {
    std::uint64_t fact = 1;
    for (int k = 2; k <= lambda.n(); ++k) fact *= static_cast<std::uint64_t>(k);
    std::uint64_t z = 1;
    auto alpha = lambda.multiplicities();
    for (std::size_t j = 1; j <= alpha.size(); ++j) {
        for (int r = 1; r <= alpha[j - 1]; ++r) z *= j * static_cast<std::uint64_t>(r);
    }
    return fact / z;
}

namespace {
void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}
} // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return out;
}

} // namespace permlab
