#pragma once

#include <span>
#include <vector>

#include "permlab/permutation.hpp"

namespace permlab {

// Partition-shaped output of RSK row insertion. rows.front() is the length
// of the longest increasing subsequence; rows.size() the longest decreasing.
struct YoungShape {
    std::vector<int> rows;

    int n() const;
    // Column lengths (conjugate partition).
    std::vector<int> columns() const;
    // True when every row of *this is <= the matching row of other.
    bool contained_in(const YoungShape& other) const;
};

YoungShape rsk_shape(std::span<const int> word);
inline YoungShape rsk_shape(const Permutation& p) { return rsk_shape(p.span()); }

// True when every Greene invariant of `next` dominates the matching one of
// `prev`: all partial sums of row lengths, and all partial sums of column
// lengths. These partial sums are monotone under adding a point; individual
// row lengths are not (a row can shrink while the one above it grows).
bool greene_invariants_dominate(const YoungShape& prev, const YoungShape& next);

struct GreeneInvariants {
    YoungShape shape;
    std::vector<int> I; // first k row lengths (0-padded past the shape)
    std::vector<int> D; // first k column lengths
};

// Greene: sum_{j<=k} I_j = max size of a union of k increasing subsequences,
// dually for D_j with decreasing subsequences.
GreeneInvariants rsk_and_greene(const Permutation& p, int k);

// Patience-sorting LIS, used as an independent cross-check of rsk row 1.
int patience_lis(std::span<const int> word);
inline int patience_lis(const Permutation& p) { return patience_lis(p.span()); }

} // namespace permlab
