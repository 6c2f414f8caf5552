#pragma once

#include <optional>
#include <vector>

#include "permlab/permutation.hpp"
#include "permlab/rng.hpp"

namespace permlab {

struct Point {
    double x;
    double y;
};

// Finite point set in the unit square with pairwise-distinct x and y
// coordinates (collisions are resolved by resampling the offending point).
struct PointSample {
    std::vector<Point> points;
    int size() const { return static_cast<int>(points.size()); }
};

struct SampleMode {
    enum class Kind { fixed_n, poisson } kind = Kind::fixed_n;
    int n = 0;       // fixed_n
    double nu = 0.0; // poisson rate
    static SampleMode fixed(int n) { return {Kind::fixed_n, n, 0.0}; }
    static SampleMode poisson(double nu) { return {Kind::poisson, 0, nu}; }
};

PointSample sample_points(const SampleMode& mode, RngStream& rng);

// Adds one fresh uniform point. Under this coupling the Greene invariants
// (the partial sums of the I_j and of the D_j) never decrease; individual
// rows of the RSK shape can shrink.
PointSample add_point(PointSample sample, RngStream& rng);

// sigma_P(i) = j when the point of x-rank i has y-rank j. The induced
// measure on S_n is uniform; the result ignores input point order.
Permutation to_permutation(const PointSample& sample);

// Per-point rank statistics, aligned with the input order:
//   X, Y   weak left/below ranks (self-inclusive),
//   Xp, Yp strict right/above counts,
//   f = |X - Y|,  h = (X + Yp) min (Xp + Y),  g = |x - y| / sqrt(2).
// max f = rho_inf(sigma_P) and min h = n - rho_inf(sigma_P), exactly.
struct PointStats {
    std::vector<int> X, Y, Xp, Yp, f, h;
    std::vector<double> g;
};

PointStats point_stats(const PointSample& sample);

struct ExtremalPoints {
    std::size_t star_index;                // argmax f = argmin h (ties: lowest index)
    std::size_t bar_index;                 // argmax g
    std::optional<std::size_t> tilde_index; // argmax g over {y > x}; absent if none
    int h_at_bar;
    double g_at_bar;
};

ExtremalPoints extremal_points(const PointSample& sample);
ExtremalPoints extremal_points(const PointSample& sample, const PointStats& stats);

// JSON replay format: array of [x, y] pairs, doubles round-tripping exactly.
std::string point_sample_to_json(const PointSample& sample);
PointSample point_sample_from_json(const std::string& text);

} // namespace permlab
