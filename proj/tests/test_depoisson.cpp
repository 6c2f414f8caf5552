#include <doctest.h>

#include <stdexcept>
#include <vector>

#include <cmath>

#include "permlab/depoisson.hpp"

using namespace permlab;

namespace {

// long-sum oracle: full-range summation with mode-anchored pmf recursion
double phi_oracle(std::span<const double> A, double m) {
    const auto k0 = static_cast<std::size_t>(m);
    const double logp0 = -m + static_cast<double>(k0) * std::log(m) -
                         std::lgamma(static_cast<double>(k0) + 1.0);
    std::vector<double> pmf(A.size(), 0.0);
    pmf[k0] = std::exp(logp0);
    for (std::size_t k = k0 + 1; k < A.size(); ++k)
        pmf[k] = pmf[k - 1] * m / static_cast<double>(k);
    for (std::size_t k = k0; k-- > 0;) pmf[k] = pmf[k + 1] * static_cast<double>(k + 1) / m;
    double total = 0;
    for (std::size_t k = 0; k < A.size(); ++k) total += pmf[k] * A[k];
    return total;
}

} // namespace

TEST_CASE("constant sequences pass through") {
    std::vector<double> A(2000, 0.37);
    CHECK(depoissonize(A, 2.0) == doctest::Approx(0.37).epsilon(1e-9));
    CHECK(depoissonize(A, 800.0) == doctest::Approx(0.37).epsilon(1e-9));
}

TEST_CASE("indicator of n >= 1 at m = 2") {
    std::vector<double> A(40, 1.0);
    A[0] = 0.0;
    CHECK(depoissonize(A, 2.0) == doctest::Approx(1.0 - std::exp(-2.0)).epsilon(1e-9));
}

TEST_CASE("truncated sum matches the long-sum oracle") {
    std::vector<double> A;
    for (int n = 0; n < 4000; ++n)
        A.push_back(static_cast<double>(n) / (static_cast<double>(n) + 1.0));
    for (double m : {50.0, 400.0, 1750.0})
        CHECK(std::abs(depoissonize(A, m) - phi_oracle(A, m)) < 1e-8);
}

TEST_CASE("input validation") {
    std::vector<double> shorty(10, 0.5);
    CHECK_THROWS_AS(depoissonize(shorty, 9.0), std::invalid_argument);
    std::vector<double> bad(200, 0.5);
    bad[60] = 1.5;
    CHECK_THROWS_AS(depoissonize(bad, 60.0), std::invalid_argument);
}

TEST_CASE("monotone in the sequence argument") {
    std::vector<double> A, B;
    for (int n = 0; n < 900; ++n) {
        A.push_back(1.0 - 1.0 / (n + 1.0));
        B.push_back(std::min(1.0, 1.0 - 1.0 / (n + 1.0) + 0.05));
    }
    for (double m : {30.0, 200.0, 600.0}) CHECK(depoissonize(A, m) < depoissonize(B, m));
}

TEST_CASE("sandwich brackets increasing sequences") {
    std::vector<double> A;
    for (int n = 0; n < 4000; ++n) A.push_back(1.0 - 1.0 / (n + 1.0));
    for (std::size_t N : {100u, 400u, 1600u}) {
        const auto r = depoisson_sandwich(A, N, SandwichMode::monotone(), 1.0);
        CHECK(r.holds_increasing);
        CHECK(r.holds);
        CHECK(r.phi_low <= r.phi_high);
        CHECK(r.ratio_ok);
    }
}

TEST_CASE("sandwich orientation flips for decreasing sequences") {
    std::vector<double> A;
    for (int n = 0; n < 4000; ++n) A.push_back(1.0 / (1.0 + 0.01 * n));
    const auto r = depoisson_sandwich(A, 400, SandwichMode::monotone(), 1.0);
    CHECK(r.holds_decreasing);
    CHECK(r.holds);
    CHECK(r.phi_low >= r.phi_high);
}

TEST_CASE("constant sequences collapse the sandwich") {
    std::vector<double> A(4000, 0.6);
    const auto r = depoisson_sandwich(A, 400, SandwichMode::monotone(), 1.0);
    CHECK(r.phi_low == doctest::Approx(0.6).epsilon(1e-9));
    CHECK(r.phi_high == doctest::Approx(0.6).epsilon(1e-9));
    CHECK(r.holds_increasing);
    CHECK(r.holds_decreasing);
}

TEST_CASE("pseudo mode verifies the ratio condition") {
    // pseudo-decreasing with a small bump that the allowed factor covers
    std::vector<double> A;
    for (int n = 0; n < 4000; ++n) A.push_back(0.8 - 0.0001 * std::min(n, 2000));
    A[350] = A[349] * (1.0 + 0.5 * std::pow(349.0, -0.75));
    auto r = depoisson_sandwich(A, 400, SandwichMode::pseudo(1.0, 0.75), 1.0);
    CHECK(r.ratio_ok);
    CHECK(r.holds);

    // a jump the ratio condition cannot absorb is reported
    A[500] = 1.0;
    r = depoisson_sandwich(A, 400, SandwichMode::pseudo(1.0, 0.75), 1.0);
    CHECK(!r.ratio_ok);

    CHECK_THROWS_AS(depoisson_sandwich(A, 400, SandwichMode::pseudo(1.0, 0.4), 1.0),
                    std::invalid_argument);
}
