#pragma once

#include <vector>

#include "permlab/partition.hpp"
#include "permlab/permutation.hpp"

namespace permlab {

// Cycle notation standardized so that each cycle leads with its maximum and
// cycles are listed by increasing leading symbol.
struct RecordCycleForm {
    std::vector<std::vector<int>> cycles;

    bool valid(int n) const;
    // Concatenation of the cycles, as a one-line word.
    std::vector<int> concatenated() const;
    Permutation reassemble(int n) const { return Permutation::from_cycles(n, cycles); }
};

RecordCycleForm record_form(const Permutation& p);

// Erase the brackets of the record cycle form; a bijection S_n -> S_n.
Permutation record_map(const Permutation& p);

// r_tau(sigma) = tau^-1 * r(tau sigma tau^-1) * tau: the record map taken in
// the symbol order induced by tau.
Permutation conjugated_record_map(const Permutation& sigma, const Permutation& tau);

// Cut the word of sigma into consecutive blocks of sizes lambda_1, lambda_2,
// ... and read each block as a cycle. Pushes uniform on S_n to uniform on
// S_n^lambda.
Permutation bracket_insertion(const Permutation& sigma, const Partition& lambda);

// bracket_insertion . record_map; uniform -> uniform on S_n^lambda.
Permutation conditional_class_map(const Permutation& sigma, const Partition& lambda);

// bracket_insertion(lambda) . r_{tau2} . bracket_insertion((n)) . r_{tau1};
// with independent uniform inputs the output is uniform on S_n^lambda.
Permutation symmetrized_class_map(const Permutation& sigma, const Permutation& tau1,
                                  const Permutation& tau2, const Partition& lambda);

} // namespace permlab
