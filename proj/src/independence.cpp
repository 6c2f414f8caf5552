#include "permlab/independence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace permlab {

namespace {

// Distinct-value compression: values sorted ascending, idx[k] = rank of
// pairs[k], cum[r] = number of observations <= r-th distinct value.
struct Axis {
    std::vector<std::int64_t> cum;
    std::vector<std::int32_t> idx;
    std::size_t distinct() const { return cum.size(); }
};

Axis compress(const std::vector<std::pair<double, double>>& pairs, bool first) {
    const std::size_t m = pairs.size();
    std::vector<std::size_t> order(m);
    for (std::size_t k = 0; k < m; ++k) order[k] = k;
    auto key = [&](std::size_t k) { return first ? pairs[k].first : pairs[k].second; };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    Axis ax;
    ax.idx.resize(m);
    std::int32_t rank = -1;
    for (std::size_t r = 0; r < m; ++r) {
        if (r == 0 || key(order[r]) != key(order[r - 1])) {
            ++rank;
            ax.cum.push_back(0);
        }
        ax.idx[order[r]] = rank;
        ax.cum[static_cast<std::size_t>(rank)] += 1;
    }
    for (std::size_t r = 1; r < ax.cum.size(); ++r) ax.cum[r] += ax.cum[r - 1];
    return ax;
}

// All arithmetic in 64-bit integers over the discrepancy numerator
//   m * A(i,j) - cumx(i) * cumy(j)
// with denominator m^2, so the cell sup is exact.
double gap_of(const std::vector<std::pair<double, double>>& pairs) {
    const std::size_t m = pairs.size();
    if (m == 0) throw std::invalid_argument("independence_gap: empty sample");
    Axis ax = compress(pairs, true);
    Axis ay = compress(pairs, false);
    const std::size_t mx = ax.distinct(), my = ay.distinct();
    const auto mm = static_cast<std::int64_t>(m);

    // y-ranks grouped by x-rank
    std::vector<std::int32_t> bucket_start(mx + 1, 0);
    for (std::size_t k = 0; k < m; ++k) bucket_start[static_cast<std::size_t>(ax.idx[k]) + 1] += 1;
    for (std::size_t r = 0; r < mx; ++r) bucket_start[r + 1] += bucket_start[r];
    std::vector<std::int32_t> grouped(m);
    {
        std::vector<std::int32_t> cursor(bucket_start.begin(), bucket_start.end() - 1);
        for (std::size_t k = 0; k < m; ++k)
            grouped[static_cast<std::size_t>(cursor[static_cast<std::size_t>(ax.idx[k])]++)] = ay.idx[k];
    }

    const std::size_t block = std::max<std::size_t>(1, std::min<std::size_t>(my, 256));
    const std::size_t nblocks = (my + block - 1) / block;
    std::vector<std::int64_t> cnt(my, 0), blk(nblocks, 0);

    std::int64_t best = 0; // numerator scale m^2
    for (std::size_t i = 0; i < mx; ++i) {
        for (std::int32_t k = bucket_start[i]; k < bucket_start[i + 1]; ++k) {
            const auto j = static_cast<std::size_t>(grouped[static_cast<std::size_t>(k)]);
            cnt[j] += 1;
            blk[j / block] += 1;
        }
        const std::int64_t cx = ax.cum[i];
        std::int64_t acc = 0; // A at the end of the previous block
        for (std::size_t b = 0; b < nblocks; ++b) {
            const std::size_t j_lo = b * block;
            const std::size_t j_hi = std::min(my, j_lo + block) - 1;
            const std::int64_t a_lo = acc;
            const std::int64_t a_hi = acc + blk[b];
            // A and cumy are both nondecreasing across the block
            const std::int64_t ub_pos = mm * a_hi - cx * ay.cum[j_lo];
            const std::int64_t ub_neg = cx * ay.cum[j_hi] - mm * a_lo;
            if (ub_pos > best || ub_neg > best) {
                std::int64_t a = a_lo;
                for (std::size_t j = j_lo; j <= j_hi; ++j) {
                    a += cnt[j];
                    const std::int64_t d = mm * a - cx * ay.cum[j];
                    best = std::max(best, d >= 0 ? d : -d);
                }
            }
            acc = a_hi;
        }
    }
    return static_cast<double>(best) / (static_cast<double>(m) * static_cast<double>(m));
}

} // namespace

double independence_gap(const PairedSample& sample) { return gap_of(sample.pairs); }

double independence_gap_std_err(const PairedSample& sample, int batches) {
    const std::size_t m = sample.size();
    if (batches < 2 || m < static_cast<std::size_t>(2 * batches))
        throw std::invalid_argument("independence_gap_std_err: too few samples for batching");
    std::vector<double> gaps;
    gaps.reserve(static_cast<std::size_t>(batches));
    const std::size_t width = m / static_cast<std::size_t>(batches);
    for (int b = 0; b < batches; ++b) {
        const auto lo = static_cast<std::size_t>(b) * width;
        const auto hi = (b == batches - 1) ? m : lo + width;
        std::vector<std::pair<double, double>> slice(sample.pairs.begin() + static_cast<std::ptrdiff_t>(lo),
                                                     sample.pairs.begin() + static_cast<std::ptrdiff_t>(hi));
        gaps.push_back(gap_of(slice));
    }
    double mean = 0;
    for (double v : gaps) mean += v;
    mean /= static_cast<double>(batches);
    double var = 0;
    for (double v : gaps) var += (v - mean) * (v - mean);
    var /= static_cast<double>(batches - 1);
    return std::sqrt(var / static_cast<double>(batches));
}

MomentSummary moment_summary(const EmpiricalDistribution& d, int max_order) {
    if (max_order < 1 || max_order > 6)
        throw std::invalid_argument("moment_summary: max_order must be in 1..6");
    const auto& s = d.samples();
    const auto m = static_cast<double>(s.size());
    MomentSummary out;
    for (int ord = 1; ord <= max_order; ++ord) {
        double sum = 0, sum2 = 0;
        for (double v : s) {
            const double p = std::pow(v, ord);
            sum += p;
            sum2 += p * p;
        }
        const double mean = sum / m;
        const double var = std::max(0.0, (sum2 - m * mean * mean) / (m - 1.0));
        out.moments.push_back(mean);
        out.std_errs.push_back(std::sqrt(var / m)); // jackknife SE of a sample mean
    }
    return out;
}

MixedMoment mixed_moment(const PairedSample& sample, int j, int k) {
    if (sample.pairs.empty()) throw std::invalid_argument("mixed_moment: empty sample");
    const auto m = static_cast<double>(sample.size());
    double sum = 0, sum2 = 0;
    for (const auto& [x, y] : sample.pairs) {
        const double p = std::pow(x, j) * std::pow(y, k);
        sum += p;
        sum2 += p * p;
    }
    const double mean = sum / m;
    const double var = std::max(0.0, (sum2 - m * mean * mean) / (m - 1.0));
    return {mean, std::sqrt(var / m)};
}

} // namespace permlab
