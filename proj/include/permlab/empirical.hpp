#pragma once

#include <span>
#include <string>
#include <vector>

namespace permlab {

// Sorted sample with right-continuous CDF queries. Construction sorts;
// merge() folds two sorted runs, so parallel builds can combine partials.
class EmpiricalDistribution {
  public:
    EmpiricalDistribution() = default;
    explicit EmpiricalDistribution(std::vector<double> samples);

    static EmpiricalDistribution merge(const EmpiricalDistribution& a,
                                       const EmpiricalDistribution& b);

    std::size_t count() const { return samples_.size(); }
    const std::vector<double>& samples() const { return samples_; }
    double cdf(double x) const; // (# samples <= x) / count

    double mean() const;
    double variance() const; // unbiased

    void write_csv(std::ostream& os) const; // single "value" column

  private:
    std::vector<double> samples_;
};

// Analytic reference CDFs.
//   std_normal  Abramowitz-Stegun 26.2.17 rational approximation,
//               |error| < 7.5e-8, pinned for cross-platform reproducibility.
//   sqrt_exp    law of sqrt(X), X exponential with the given mean:
//               CDF(b) = 1 - exp(-b^2/mean) for b >= 0.
struct ReferenceLaw {
    enum class Kind { std_normal, sqrt_exp } kind = Kind::std_normal;
    double mean = 1.0; // sqrt_exp only

    static ReferenceLaw std_normal() { return {Kind::std_normal, 0.0}; }
    static ReferenceLaw sqrt_exp(double mean);

    double cdf(double x) const;
};

double normal_cdf(double x);

// sup_x |F - G|. Exact over the jump points (and their left limits) of the
// empirical argument(s).
double kolmogorov_distance(const EmpiricalDistribution& a, const EmpiricalDistribution& b);
double kolmogorov_distance(const EmpiricalDistribution& a, const ReferenceLaw& b);
inline double kolmogorov_distance(const ReferenceLaw& a, const EmpiricalDistribution& b) {
    return kolmogorov_distance(b, a);
}
// Two analytic laws compared on a caller-supplied grid.
double kolmogorov_distance(const ReferenceLaw& a, const ReferenceLaw& b, std::span<const double> grid);

} // namespace permlab
