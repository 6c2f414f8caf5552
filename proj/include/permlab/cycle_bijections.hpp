#pragma once

#include "permlab/permutation.hpp"
#include "permlab/rng.hpp"

namespace permlab {

// Conjugacy-class-preserving bijection that rethreads each cycle, written in
// record form (a1 a2 ... aj) with a1 the maximum, into
// (a1 a3 ... a2 a4 ...): odd positions first, then even positions.
Permutation sqrt_rearrangement(const Permutation& p);

// Splits every even cycle, written with its largest element first, into its
// two written halves, read as two cycles; odd cycles are untouched. The two
// halves are precisely the cycles of the square of the rethreaded cycle's
// preimage, so bracket_split(sqrt_rearrangement(p)) == square(p).
Permutation bracket_split(const Permutation& p);

// The n-cycle tracing the word of sigma: sigma(k) -> sigma(k+1), cyclically.
// Satisfies rho_q(cyclify(sigma)) == oscillation(sigma, q, 1). The cycle is
// the same for every start index i0; the parameter is kept for the interface.
Permutation cyclify(const Permutation& sigma, int i0 = 1);

// Chinese-restaurant insertion of symbol n+1. Consumes exactly two draws
// (one Bernoulli, one uniform index), in that order, for reproducibility.
// Uniform on S_n in -> uniform on S_{n+1} out; every outcome satisfies
// rho_q(out) >= rho_q(in).
Permutation crp_extend(const Permutation& sigma, RngStream& rng);

} // namespace permlab
