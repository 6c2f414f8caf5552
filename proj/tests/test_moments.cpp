#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "permlab/moments.hpp"
#include "permlab/oracles.hpp"
#include "permlab/statistics.hpp"

using namespace permlab;

TEST_CASE("footrule moments at n=3 are exact") {
    const auto p = exact_moments(3, "rho_q", 1);
    CHECK(p.mean == 8.0 / 3.0);
    CHECK(p.std_dev * p.std_dev == doctest::Approx(20.0 / 9.0).epsilon(1e-15));
    CHECK(p.method == MomentMethod::exact);
}

TEST_CASE("cycle count mean is the harmonic number") {
    CHECK(exact_moments(3, "cycle_count").mean == 11.0 / 6.0);
    const auto p = exact_moments(3, "cycle_count");
    CHECK(p.std_dev * p.std_dev == doctest::Approx(17.0 / 36.0).epsilon(1e-15));
    // large-n double path agrees with a direct sum
    const auto big = exact_moments(100, "cycle_count");
    double h = 0;
    for (int k = 1; k <= 100; ++k) h += 1.0 / k;
    CHECK(big.mean == doctest::Approx(h).epsilon(1e-14));
}

TEST_CASE("kendall moments against the closed form") {
    const auto p = exact_moments(3, "kendall_tau");
    CHECK(p.mean == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(p.std_dev * p.std_dev == doctest::Approx(11.0 / 12.0).epsilon(1e-15));
}

TEST_CASE("exact moments match exhaustive enumeration up to n=6") {
    CHECK(run_oracle("moments_enumeration").pass);
}

TEST_CASE("footrule mean grows like n^2") {
    // E rho_1 = (n^2 - 1)/3
    for (int n : {10, 100, 400}) {
        const auto p = exact_moments(n, "rho_q", 1);
        CHECK(p.mean == doctest::Approx((static_cast<double>(n) * n - 1.0) / 3.0).epsilon(1e-12));
    }
    // ratio across a decade close to 100
    const double r = exact_moments(1000, "rho_q", 1).mean / exact_moments(100, "rho_q", 1).mean;
    CHECK(r > 90);
    CHECK(r < 110);
}

TEST_CASE("variance scale orders") {
    // var rho_q ~ n^{2q+1}, var tau ~ n^3
    for (int q : {1, 2}) {
        const double v1 = std::pow(exact_moments(200, "rho_q", q).std_dev, 2);
        const double v2 = std::pow(exact_moments(400, "rho_q", q).std_dev, 2);
        const double observed = std::log2(v2 / v1);
        CHECK(observed == doctest::Approx(2.0 * q + 1.0).epsilon(0.05));
    }
    const double t1 = std::pow(exact_moments(200, "kendall_tau").std_dev, 2);
    const double t2 = std::pow(exact_moments(400, "kendall_tau").std_dev, 2);
    CHECK(std::log2(t2 / t1) == doctest::Approx(3.0).epsilon(0.05));
}

TEST_CASE("normalize") {
    NormalizationParams p;
    p.mean = 10;
    p.std_dev = 2;
    CHECK(normalize(10, p) == 0);
    CHECK(normalize(12, p) == 1);
    p.std_dev = 0;
    CHECK_THROWS_AS(normalize(1, p), std::invalid_argument);
}

TEST_CASE("normalized footrule over S_3 has mean 0 variance 1") {
    const auto params = exact_moments(3, "rho_q", 1);
    double sum = 0, sum2 = 0;
    for_each_permutation(3, [&](const Permutation& perm) {
        const double z = normalize(static_cast<double>(spearman_rho_q(perm, 1)), params);
        sum += z;
        sum2 += z * z;
    });
    CHECK(sum / 6.0 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(sum2 / 6.0 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("monte carlo moments are close to exact ones") {
    const auto exact = exact_moments(50, "rho_q", 1);
    const auto mc = mc_moments(50, "rho_q", 1, 20000, RngStream(123));
    CHECK(mc.method == MomentMethod::monte_carlo);
    CHECK(mc.mean_std_err > 0);
    CHECK(std::abs(mc.mean - exact.mean) < 5 * mc.mean_std_err);
    CHECK(std::abs(mc.std_dev - exact.std_dev) < 6 * mc.sd_std_err);
}

TEST_CASE("unsupported statistics are rejected") {
    CHECK_THROWS_AS(exact_moments(10, "rho_inf"), std::invalid_argument);
    CHECK_THROWS_AS(exact_moments(10, "rho_q", 0), std::invalid_argument);
}

TEST_CASE("large-n rho_q moments stay consistent across integer and float paths") {
    // q=2, n around the int128 bound: the two paths agree to float precision
    const auto a = exact_moments(3000, "rho_q", 2);
    CHECK(a.mean == doctest::Approx(std::pow(3000.0, 3) / 6.0).epsilon(1e-3));
    const auto big = exact_moments(100000, "rho_q", 2); // long double path
    CHECK(std::isfinite(big.std_dev));
    CHECK(big.mean == doctest::Approx(std::pow(100000.0, 3) / 6.0).epsilon(1e-3));
}
