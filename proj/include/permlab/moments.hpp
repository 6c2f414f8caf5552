#pragma once

#include <cstdint>
#include <string>

#include "permlab/rng.hpp"

namespace permlab {

enum class MomentMethod { exact, monte_carlo };

struct NormalizationParams {
    std::string statistic_id;
    int n = 0;
    int q = 0; // 0 when not applicable
    double mean = 0.0;
    double std_dev = 1.0;
    MomentMethod method = MomentMethod::exact;
    double mean_std_err = 0.0; // 0 for exact
    double sd_std_err = 0.0;
};

// Exact mean/variance under the uniform measure on S_n.
//   rho_q:       index-decomposition reduced to power-sum prefix tables, O(n).
//   kendall_tau: mean n(n-1)/4, variance n(n-1)(2n+5)/72.
//   cycle_count: mean H_n, variance sum_k (1/k - 1/k^2).
// Supported ids: "rho_q" (q >= 1), "kendall_tau", "cycle_count".
NormalizationParams exact_moments(int n, const std::string& statistic_id, int q = 0);

// Monte Carlo mean/sd for statistics without an exact routine (for example
// rho_q of sigma^2). Reports standard errors of both estimates.
NormalizationParams mc_moments(int n, const std::string& statistic_id, int q, long samples,
                               RngStream rng);

double normalize(double value, const NormalizationParams& params);

} // namespace permlab
