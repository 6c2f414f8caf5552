#include "permlab/rng.hpp"

#include <cmath>

namespace permlab {

std::int64_t poisson_sample(double nu, RngStream& rng) {
    if (nu <= 0.0) return 0;
    const auto k0 = static_cast<std::int64_t>(nu);
    // pmf at the anchor via lgamma, then multiplicative recursion outward.
    const double logp0 = -nu + static_cast<double>(k0) * std::log(nu)
                         - std::lgamma(static_cast<double>(k0) + 1.0);
    const double p0 = std::exp(logp0);
    const double u = rng.next_double();

    double cum = p0;
    if (u < cum) return k0;
    double up = p0;   // pmf at k0 + i
    double down = p0; // pmf at k0 - i
    const auto span = static_cast<std::int64_t>(13.0 * std::sqrt(nu) + 60.0);
    for (std::int64_t i = 1; i <= span; ++i) {
        up *= nu / static_cast<double>(k0 + i);
        cum += up;
        if (u < cum) return k0 + i;
        if (k0 - i >= 0) {
            down *= static_cast<double>(k0 - i + 1) / nu;
            cum += down;
            if (u < cum) return k0 - i;
        }
    }
    return k0 + span;
}

} // namespace permlab
