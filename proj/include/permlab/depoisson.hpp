#pragma once

#include <span>

namespace permlab {

// phi_A(m) = e^{-m} sum_n m^n/n! A_n, truncated to the window
// [m - 12 sqrt(m), m + 12 sqrt(m)] (from 0 when m < 25). The neglected
// Poisson tail mass is below 1e-9 for m >= 25 by a Chernoff bound.
// Throws when A does not cover the window or has values outside [0,1].
double depoissonize(std::span<const double> A, double m);

struct SandwichMode {
    enum class Kind { monotone, pseudo } kind = Kind::monotone;
    double c = 0.0;     // pseudo: ratio constant
    double delta = 1.0; // pseudo: exponent, must be > 1/2
    static SandwichMode monotone() { return {}; }
    static SandwichMode pseudo(double c, double delta) { return {Kind::pseudo, c, delta}; }
};

// Sandwich of A_N between phi_A(N -+ sqrt(N log N)).
//   monotone: slack C/N^2. Both orientations are evaluated:
//     increasing:  phi_low - slack <= A_N <= phi_high + slack
//     decreasing:  phi_high - slack <= A_N <= phi_low + slack
//   pseudo(c, delta): requires delta > 1/2; the ratio condition
//     A_n (1 + c/n^delta) > A_{n+1} is verified over the supplied range and
//     its failure is reported (ratio_ok), never silently ignored. Slack is
//     C log N / N^{delta - 1/2} and both orientations are evaluated.
struct SandwichResult {
    double phi_low;  // phi_A(N - sqrt(N log N))
    double phi_high; // phi_A(N + sqrt(N log N))
    double a_n;      // A_N
    double slack;
    bool holds_increasing;
    bool holds_decreasing;
    bool holds; // either orientation brackets A_N
    bool ratio_ok; // pseudo mode only; true in monotone mode
};

SandwichResult depoisson_sandwich(std::span<const double> A, std::size_t N,
                                  const SandwichMode& mode, double C = 1.0);

} // namespace permlab
