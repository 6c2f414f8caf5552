#include "permlab/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace permlab {

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> samples)
    : samples_(std::move(samples)) {
    if (samples_.empty()) throw std::invalid_argument("EmpiricalDistribution: empty sample");
    std::sort(samples_.begin(), samples_.end());
}

EmpiricalDistribution EmpiricalDistribution::merge(const EmpiricalDistribution& a,
                                                   const EmpiricalDistribution& b) {
    EmpiricalDistribution out;
    out.samples_.resize(a.samples_.size() + b.samples_.size());
    std::merge(a.samples_.begin(), a.samples_.end(), b.samples_.begin(), b.samples_.end(),
               out.samples_.begin());
    return out;
}

double EmpiricalDistribution::cdf(double x) const {
    const auto it = std::upper_bound(samples_.begin(), samples_.end(), x);
    return static_cast<double>(it - samples_.begin()) / static_cast<double>(samples_.size());
}

double EmpiricalDistribution::mean() const {
    double s = 0;
    for (double v : samples_) s += v;
    return s / static_cast<double>(samples_.size());
}

double EmpiricalDistribution::variance() const {
    const double m = mean();
    double s = 0;
    for (double v : samples_) s += (v - m) * (v - m);
    return s / static_cast<double>(samples_.size() - 1);
}

void EmpiricalDistribution::write_csv(std::ostream& os) const {
    os << "value\n";
    char buf[40];
    for (double v : samples_) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        os << buf << '\n';
    }
}

ReferenceLaw ReferenceLaw::sqrt_exp(double mean) {
    if (!(mean > 0)) throw std::invalid_argument("sqrt_exp: mean must be positive");
    return {Kind::sqrt_exp, mean};
}

double normal_cdf(double x) {
    // Abramowitz-Stegun 26.2.17, |eps| < 7.5e-8
    if (x < 0) return 1.0 - normal_cdf(-x);
    const double t = 1.0 / (1.0 + 0.2316419 * x);
    const double poly =
        t * (0.319381530 + t * (-0.356563782 + t * (1.781477937 + t * (-1.821255978 + t * 1.330274429))));
    const double pdf = 0.3989422804014327 * std::exp(-0.5 * x * x);
    return 1.0 - pdf * poly;
}

double ReferenceLaw::cdf(double x) const {
    if (kind == Kind::std_normal) return normal_cdf(x);
    if (x <= 0) return 0.0;
    return 1.0 - std::exp(-x * x / mean);
}

namespace {

// Exact sup over the jump points of the empirical CDF against an analytic F.
double ks_empirical_vs_law(const EmpiricalDistribution& e, const ReferenceLaw& law) {
    const auto& s = e.samples();
    const auto m = static_cast<double>(s.size());
    double d = 0;
    std::size_t k = 0;
    while (k < s.size()) {
        std::size_t j = k;
        while (j + 1 < s.size() && s[j + 1] == s[k]) ++j;
        const double F = law.cdf(s[k]);
        const double lo = static_cast<double>(k) / m;     // left limit
        const double hi = static_cast<double>(j + 1) / m; // value at the jump
        d = std::max({d, std::abs(hi - F), std::abs(F - lo)});
        k = j + 1;
    }
    return d;
}

} // namespace

double kolmogorov_distance(const EmpiricalDistribution& a, const EmpiricalDistribution& b) {
    const auto& u = a.samples();
    const auto& v = b.samples();
    const auto mu = static_cast<double>(u.size());
    const auto mv = static_cast<double>(v.size());
    double d = 0;
    std::size_t i = 0, j = 0;
    while (i < u.size() || j < v.size()) {
        const double x = (j >= v.size() || (i < u.size() && u[i] <= v[j])) ? u[i] : v[j];
        while (i < u.size() && u[i] == x) ++i;
        while (j < v.size() && v[j] == x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / mu - static_cast<double>(j) / mv));
    }
    return d;
}

double kolmogorov_distance(const EmpiricalDistribution& a, const ReferenceLaw& b) {
    return ks_empirical_vs_law(a, b);
}

double kolmogorov_distance(const ReferenceLaw& a, const ReferenceLaw& b,
                           std::span<const double> grid) {
    if (grid.empty()) throw std::invalid_argument("kolmogorov_distance: empty evaluation grid");
    double d = 0;
    for (double x : grid) d = std::max(d, std::abs(a.cdf(x) - b.cdf(x)));
    return d;
}

} // namespace permlab
