#pragma once

#include <functional>
#include <string>
#include <vector>

#include "permlab/permutation.hpp"

namespace permlab {

// Exhaustive and brute-force verification routines at desk sizes. Each
// check compares a library implementation against an independent route:
// enumeration, subset brute force, or a hand derivation.
struct OracleResult {
    std::string name;
    bool pass;
    std::string detail;
};

std::vector<std::string> oracle_names();
OracleResult run_oracle(const std::string& name);
std::vector<OracleResult> run_all_oracles();

// Applies fn to every permutation of [n] in lexicographic word order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

// Brute force over all position subsets: the largest subset whose induced
// subsequence has longest decreasing (increasing) run <= k. By Greene's
// theorem this equals sum_{j<=k} I_j (resp. D_j). Practical for n <= ~16.
int max_union_increasing(const Permutation& p, int k);
int max_union_decreasing(const Permutation& p, int k);

} // namespace permlab
