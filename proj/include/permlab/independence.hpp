#pragma once

#include <span>
#include <utility>
#include <vector>

#include "permlab/empirical.hpp"

namespace permlab {

struct PairedSample {
    std::vector<std::pair<double, double>> pairs;
    std::size_t size() const { return pairs.size(); }
};

// sup_{x,y} |F_joint(x,y) - F_X(x) F_Y(y)| over the empirical CDFs. All
// three step functions are constant on the open cells of the observed
// coordinate grid, so the sup over R^2 (one-sided limits included) equals
// the max over grid cells; that max is computed exactly, with a blocked
// sweep that prunes cells which cannot beat the running best. Invariant
// under strictly monotone maps of either coordinate.
double independence_gap(const PairedSample& sample);

// Batch-split Monte Carlo standard error for the gap: the sample is cut
// into `batches` consecutive slices, the gap recomputed per slice, and the
// spread of the slice gaps scaled down to the full sample size.
double independence_gap_std_err(const PairedSample& sample, int batches = 10);

// Raw sample moments 1..max_order (max 6) with jackknife standard errors.
struct MomentSummary {
    std::vector<double> moments;
    std::vector<double> std_errs;
};
MomentSummary moment_summary(const EmpiricalDistribution& d, int max_order);

// Mixed moment E[X^j Y^k] with its standard error.
struct MixedMoment {
    double value;
    double std_err;
};
MixedMoment mixed_moment(const PairedSample& sample, int j, int k);

} // namespace permlab
