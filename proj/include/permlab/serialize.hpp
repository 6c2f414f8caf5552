#pragma once

#include <string>

#include "permlab/partition.hpp"
#include "permlab/permutation.hpp"

namespace permlab {

// Wire formats: a permutation is a JSON array of 1-based integers (its
// one-line word); a partition is its weakly decreasing parts array.
std::string permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const std::string& text);

std::string partition_to_json(const Partition& p);
Partition partition_from_json(const std::string& text);

} // namespace permlab
