#include "permlab/depoisson.hpp"

#include <cmath>
#include <stdexcept>

namespace permlab {

double depoissonize(std::span<const double> A, double m) {
    if (!(m > 0)) throw std::invalid_argument("depoissonize: m must be positive");
    const double half_width = 12.0 * std::sqrt(m);
    const auto hi = static_cast<std::size_t>(std::ceil(m + half_width));
    if (A.size() <= hi)
        throw std::invalid_argument("depoissonize: window exceeds provided A range");
    const std::size_t lo =
        (m < 25.0) ? 0 : static_cast<std::size_t>(std::max(0.0, std::floor(m - half_width)));

    const auto k0 = static_cast<std::size_t>(m);
    const double logp0 = -m + static_cast<double>(k0) * std::log(m) - std::lgamma(static_cast<double>(k0) + 1.0);
    const double p0 = std::exp(logp0);

    auto check = [&](std::size_t idx) {
        const double v = A[idx];
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("depoissonize: A values must lie in [0,1]");
        return v;
    };

    double total = p0 * check(k0);
    double p = p0;
    for (std::size_t k = k0 + 1; k <= hi; ++k) {
        p *= m / static_cast<double>(k);
        total += p * check(k);
    }
    p = p0;
    for (std::size_t k = k0; k-- > lo;) {
        p *= static_cast<double>(k + 1) / m;
        total += p * check(k);
    }
    return total;
}

SandwichResult depoisson_sandwich(std::span<const double> A, std::size_t N,
                                  const SandwichMode& mode, double C) {
    if (N < 2) throw std::invalid_argument("depoisson_sandwich: N too small");
    if (A.size() <= N) throw std::invalid_argument("depoisson_sandwich: A must cover index N");
    const auto dN = static_cast<double>(N);
    const double width = std::sqrt(dN * std::log(dN));

    SandwichResult r{};
    r.phi_low = depoissonize(A, dN - width);
    r.phi_high = depoissonize(A, dN + width);
    r.a_n = A[N];
    r.ratio_ok = true;

    if (mode.kind == SandwichMode::Kind::monotone) {
        r.slack = C / (dN * dN);
    } else {
        if (!(mode.delta > 0.5))
            throw std::invalid_argument("depoisson_sandwich: pseudo mode requires delta > 1/2");
        for (std::size_t n = 1; n + 1 < A.size(); ++n) {
            const double factor = 1.0 + mode.c / std::pow(static_cast<double>(n), mode.delta);
            if (!(A[n] * factor > A[n + 1])) {
                r.ratio_ok = false;
                break;
            }
        }
        r.slack = C * std::log(dN) / std::pow(dN, mode.delta - 0.5);
    }
    r.holds_increasing = (r.phi_low - r.slack <= r.a_n) && (r.a_n <= r.phi_high + r.slack);
    r.holds_decreasing = (r.phi_high - r.slack <= r.a_n) && (r.a_n <= r.phi_low + r.slack);
    r.holds = r.holds_increasing || r.holds_decreasing;
    return r;
}

} // namespace permlab
