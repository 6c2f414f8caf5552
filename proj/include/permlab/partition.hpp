#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "permlab/permutation.hpp"

namespace permlab {

// Integer partition: weakly decreasing positive parts. Indexes the
// conjugacy classes of S_n via cycle type.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts); // validates
    static Partition single_cycle(int n) { return Partition({n}); }
    static Partition all_ones(int n);
    // n split into at most max_parts near-equal parts.
    static Partition balanced(int n, int max_parts);

    int n() const { return n_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }

    // Multiplicity vector: alpha[j-1] = number of parts equal to j.
    std::vector<int> multiplicities() const;

    bool operator==(const Partition&) const = default;

  private:
    std::vector<int> parts_;
    int n_ = 0;
};

Partition cycle_type(const Permutation& p);

// |S_n^lambda| = n! / prod_j j^{alpha_j} alpha_j!  (only for small n).
std::uint64_t conjugacy_class_size(const Partition& lambda);

// All partitions of n, for exhaustive small-n checks.
std::vector<Partition> partitions_of(int n);

} // namespace permlab
