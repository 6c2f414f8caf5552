#include "permlab/statistics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

namespace permlab {

namespace {

using int128 = __int128;

std::int64_t narrow_or_throw(int128 v) {
    if (v > static_cast<int128>(std::numeric_limits<std::int64_t>::max()))
        throw std::overflow_error("statistic exceeds 64-bit range; reduce q or n");
    return static_cast<std::int64_t>(v);
}

int128 ipow(std::int64_t base, int q) {
    int128 r = 1;
    for (int k = 0; k < q; ++k) r *= base;
    return r;
}

} // namespace

std::int64_t spearman_rho_q(std::span<const int> word, int q) {
    if (q < 1) throw std::invalid_argument("spearman_rho_q: q must be >= 1");
    const auto n = static_cast<int>(word.size());
    if (q == 1) {
        std::int64_t s = 0;
        for (int i = 0; i < n; ++i) s += std::abs(static_cast<std::int64_t>(word[static_cast<std::size_t>(i)]) - (i + 1));
        return s;
    }
    if (q == 2) {
        std::int64_t s = 0;
        for (int i = 0; i < n; ++i) {
            const std::int64_t d = static_cast<std::int64_t>(word[static_cast<std::size_t>(i)]) - (i + 1);
            s += d * d;
        }
        return s;
    }
    int128 s = 0;
    for (int i = 0; i < n; ++i)
        s += ipow(std::abs(static_cast<std::int64_t>(word[static_cast<std::size_t>(i)]) - (i + 1)), q);
    return narrow_or_throw(s);
}

RhoInfResult spearman_rho_inf(std::span<const int> word) {
    const auto n = static_cast<int>(word.size());
    int mx = 0, one_sided = 0;
    for (int i = 0; i < n; ++i) {
        const int d = (i + 1) - word[static_cast<std::size_t>(i)];
        mx = std::max(mx, std::abs(d));
        one_sided = std::max(one_sided, d);
    }
    return {mx, n - mx, one_sided};
}

std::int64_t kendall_tau(std::span<const int> word) {
    static thread_local std::vector<int> a, tmp;
    a.assign(word.begin(), word.end());
    tmp.resize(a.size());
    std::int64_t inv = 0;
    const std::size_t n = a.size();
    for (std::size_t width = 1; width < n; width *= 2) {
        for (std::size_t lo = 0; lo + width < n; lo += 2 * width) {
            const std::size_t mid = lo + width;
            const std::size_t hi = std::min(lo + 2 * width, n);
            std::size_t i = lo, j = mid, k = lo;
            while (i < mid && j < hi) {
                if (a[i] <= a[j]) {
                    tmp[k++] = a[i++];
                } else {
                    inv += static_cast<std::int64_t>(mid - i);
                    tmp[k++] = a[j++];
                }
            }
            while (i < mid) tmp[k++] = a[i++];
            while (j < hi) tmp[k++] = a[j++];
            std::copy(tmp.begin() + static_cast<std::ptrdiff_t>(lo),
                      tmp.begin() + static_cast<std::ptrdiff_t>(hi),
                      a.begin() + static_cast<std::ptrdiff_t>(lo));
        }
    }
    return inv;
}

ClassStatistics class_statistics(std::span<const int> word) {
    const auto n = static_cast<int>(word.size());
    static thread_local std::vector<char> visited;
    visited.assign(word.size(), 0);
    int hamming = 0, cycles = 0;
    for (int i = 1; i <= n; ++i) {
        if (word[static_cast<std::size_t>(i) - 1] != i) ++hamming;
        if (!visited[static_cast<std::size_t>(i) - 1]) {
            ++cycles;
            int j = i;
            while (!visited[static_cast<std::size_t>(j) - 1]) {
                visited[static_cast<std::size_t>(j) - 1] = 1;
                j = word[static_cast<std::size_t>(j) - 1];
            }
        }
    }
    return {hamming, n - cycles, cycles};
}

std::int64_t oscillation(std::span<const int> word, int q, int skip) {
    const auto n = static_cast<int>(word.size());
    if (q < 1) throw std::invalid_argument("oscillation: q must be >= 1");
    if (skip < 1 || skip >= n) throw std::invalid_argument("oscillation: skip must satisfy 1 <= skip < n");
    int128 s = 0;
    for (int i = 0; i < n; ++i) {
        const int j = (i + skip) % n;
        s += ipow(std::abs(static_cast<std::int64_t>(word[static_cast<std::size_t>(j)]) -
                           word[static_cast<std::size_t>(i)]),
                  q);
    }
    return narrow_or_throw(s);
}

std::int64_t rho_q_on_square(std::span<const int> word, int q) {
    static thread_local std::vector<int> sq;
    sq.resize(word.size());
    for (std::size_t i = 0; i < word.size(); ++i)
        sq[i] = word[static_cast<std::size_t>(word[i]) - 1];
    return spearman_rho_q(sq, q);
}

std::int64_t second_order_oscillation(std::span<const int> word) {
    const auto n = static_cast<int>(word.size());
    std::int64_t s = 0;
    for (int i = 1; i <= n; ++i) {
        const int si = word[static_cast<std::size_t>(i) - 1];
        const int ssi = word[static_cast<std::size_t>(si) - 1];
        const std::int64_t d = (static_cast<std::int64_t>(ssi) - si) - (static_cast<std::int64_t>(si) - i);
        s += d * d;
    }
    return s;
}

} // namespace permlab
