#include "permlab/rsk.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace permlab {

int YoungShape::n() const { return std::accumulate(rows.begin(), rows.end(), 0); }

std::vector<int> YoungShape::columns() const {
    std::vector<int> cols(rows.empty() ? 0 : static_cast<std::size_t>(rows.front()), 0);
    for (int r : rows)
        for (int c = 0; c < r; ++c) cols[static_cast<std::size_t>(c)] += 1;
    return cols;
}

bool YoungShape::contained_in(const YoungShape& other) const {
    if (rows.size() > other.rows.size()) return false;
    for (std::size_t j = 0; j < rows.size(); ++j)
        if (rows[j] > other.rows[j]) return false;
    return true;
}

namespace {

bool prefix_sums_dominated(const std::vector<int>& a, const std::vector<int>& b) {
    long sa = 0, sb = 0;
    const std::size_t k = std::max(a.size(), b.size());
    for (std::size_t j = 0; j < k; ++j) {
        sa += j < a.size() ? a[j] : 0;
        sb += j < b.size() ? b[j] : 0;
        if (sa > sb) return false;
    }
    return true;
}

} // namespace

bool greene_invariants_dominate(const YoungShape& prev, const YoungShape& next) {
    return prefix_sums_dominated(prev.rows, next.rows) &&
           prefix_sums_dominated(prev.columns(), next.columns());
}

YoungShape rsk_shape(std::span<const int> word) {
    std::vector<std::vector<int>> tableau;
    for (int v : word) {
        int cur = v;
        bool placed = false;
        for (auto& row : tableau) {
            auto it = std::lower_bound(row.begin(), row.end(), cur);
            if (it == row.end()) {
                row.push_back(cur);
                placed = true;
                break;
            }
            std::swap(*it, cur);
        }
        if (!placed) tableau.push_back({cur});
    }
    YoungShape shape;
    shape.rows.reserve(tableau.size());
    for (const auto& row : tableau) shape.rows.push_back(static_cast<int>(row.size()));
    return shape;
}

GreeneInvariants rsk_and_greene(const Permutation& p, int k) {
    if (k < 1 || k > p.size()) throw std::invalid_argument("rsk_and_greene: k out of range");
    GreeneInvariants g;
    g.shape = rsk_shape(p);
    auto cols = g.shape.columns();
    g.I.assign(static_cast<std::size_t>(k), 0);
    g.D.assign(static_cast<std::size_t>(k), 0);
    for (int j = 0; j < k; ++j) {
        if (j < static_cast<int>(g.shape.rows.size())) g.I[static_cast<std::size_t>(j)] = g.shape.rows[static_cast<std::size_t>(j)];
        if (j < static_cast<int>(cols.size())) g.D[static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j)];
    }
    return g;
}

int patience_lis(std::span<const int> word) {
    static thread_local std::vector<int> tails;
    tails.clear();
    for (int v : word) {
        auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end())
            tails.push_back(v);
        else
            *it = v;
    }
    return static_cast<int>(tails.size());
}

} // namespace permlab
