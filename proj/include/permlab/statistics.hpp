#pragma once

#include <cstdint>
#include <span>

#include "permlab/permutation.hpp"

namespace permlab {

// Spearman family: sum_i |sigma(i) - i|^q. q=1 is the footrule, q=2 rho.
std::int64_t spearman_rho_q(std::span<const int> word, int q);
inline std::int64_t spearman_rho_q(const Permutation& p, int q) { return spearman_rho_q(p.span(), q); }

struct RhoInfResult {
    int rho_inf;   // max |i - sigma(i)|
    int h;         // n - rho_inf
    int one_sided; // max (i - sigma(i)), 0 for the identity
};
RhoInfResult spearman_rho_inf(std::span<const int> word);
inline RhoInfResult spearman_rho_inf(const Permutation& p) { return spearman_rho_inf(p.span()); }

// Inversion count by merge counting, O(n log n).
std::int64_t kendall_tau(std::span<const int> word);
inline std::int64_t kendall_tau(const Permutation& p) { return kendall_tau(p.span()); }

struct ClassStatistics {
    int hamming;     // # non-fixed points
    int cayley;      // n - cycle_count
    int cycle_count; // cycles including fixed points
};
ClassStatistics class_statistics(std::span<const int> word);
inline ClassStatistics class_statistics(const Permutation& p) { return class_statistics(p.span()); }

// sum_i |sigma(i+skip) - sigma(i)|^q with indices cyclic mod n.
std::int64_t oscillation(std::span<const int> word, int q, int skip = 1);
inline std::int64_t oscillation(const Permutation& p, int q, int skip = 1) {
    return oscillation(p.span(), q, skip);
}

// rho_{q,2}(sigma) = rho_q(sigma^2).
std::int64_t rho_q_on_square(std::span<const int> word, int q);
inline std::int64_t rho_q_on_square(const Permutation& p, int q) { return rho_q_on_square(p.span(), q); }

// rho_2^{(2)}(sigma) = sum_i ((sigma^2(i)-sigma(i)) - (sigma(i)-i))^2.
// Satisfies rho_2^{(2)} + 8 sum i*sigma(i) - 2 sum i*sigma^2(i) = 6 sum k^2.
std::int64_t second_order_oscillation(std::span<const int> word);
inline std::int64_t second_order_oscillation(const Permutation& p) {
    return second_order_oscillation(p.span());
}

} // namespace permlab
