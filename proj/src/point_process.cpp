#include "permlab/point_process.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace permlab {

namespace {

// Redraw points until all x and all y coordinates are pairwise distinct.
void enforce_distinct(PointSample& sample, RngStream& rng) {
    const std::size_t n = sample.points.size();
    if (n < 2) return;
    std::vector<std::size_t> idx(n);
    for (bool clean = false; !clean;) {
        clean = true;
        std::iota(idx.begin(), idx.end(), 0u);
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return sample.points[a].x < sample.points[b].x;
        });
        for (std::size_t k = 1; k < n; ++k)
            if (sample.points[idx[k]].x == sample.points[idx[k - 1]].x) {
                sample.points[idx[k]] = {rng.next_double(), rng.next_double()};
                clean = false;
            }
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return sample.points[a].y < sample.points[b].y;
        });
        for (std::size_t k = 1; k < n; ++k)
            if (sample.points[idx[k]].y == sample.points[idx[k - 1]].y) {
                sample.points[idx[k]] = {rng.next_double(), rng.next_double()};
                clean = false;
            }
    }
}

} // namespace

PointSample sample_points(const SampleMode& mode, RngStream& rng) {
    std::int64_t n = 0;
    if (mode.kind == SampleMode::Kind::fixed_n) {
        if (mode.n < 0) throw std::invalid_argument("sample_points: n must be >= 0");
        n = mode.n;
    } else {
        if (!(mode.nu > 0)) throw std::invalid_argument("sample_points: nu must be > 0");
        n = poisson_sample(mode.nu, rng);
    }
    PointSample out;
    out.points.reserve(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k) out.points.push_back({rng.next_double(), rng.next_double()});
    enforce_distinct(out, rng);
    return out;
}

PointSample add_point(PointSample sample, RngStream& rng) {
    sample.points.push_back({rng.next_double(), rng.next_double()});
    enforce_distinct(sample, rng);
    return sample;
}

namespace {

// x-ranks and y-ranks (1-based) for a distinct-coordinate sample.
void ranks_of(const PointSample& sample, std::vector<int>& xr, std::vector<int>& yr) {
    const std::size_t n = sample.points.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0u);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return sample.points[a].x < sample.points[b].x; });
    xr.assign(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        if (r > 0 && sample.points[idx[r]].x == sample.points[idx[r - 1]].x)
            throw std::invalid_argument("duplicate x coordinate; resample the point set");
        xr[idx[r]] = static_cast<int>(r) + 1;
    }
    std::iota(idx.begin(), idx.end(), 0u);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return sample.points[a].y < sample.points[b].y; });
    yr.assign(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        if (r > 0 && sample.points[idx[r]].y == sample.points[idx[r - 1]].y)
            throw std::invalid_argument("duplicate y coordinate; resample the point set");
        yr[idx[r]] = static_cast<int>(r) + 1;
    }
}

} // namespace

Permutation to_permutation(const PointSample& sample) {
    if (sample.points.empty()) throw std::invalid_argument("to_permutation: empty sample");
    std::vector<int> xr, yr;
    ranks_of(sample, xr, yr);
    std::vector<int> word(sample.points.size());
    for (std::size_t k = 0; k < sample.points.size(); ++k)
        word[static_cast<std::size_t>(xr[k]) - 1] = yr[k];
    return Permutation::from_word_unchecked(std::move(word));
}

PointStats point_stats(const PointSample& sample) {
    const std::size_t n = sample.points.size();
    PointStats st;
    ranks_of(sample, st.X, st.Y);
    st.Xp.resize(n);
    st.Yp.resize(n);
    st.f.resize(n);
    st.h.resize(n);
    st.g.resize(n);
    const auto ni = static_cast<int>(n);
    for (std::size_t k = 0; k < n; ++k) {
        st.Xp[k] = ni - st.X[k];
        st.Yp[k] = ni - st.Y[k];
        st.f[k] = std::abs(st.X[k] - st.Y[k]);
        st.h[k] = std::min(st.X[k] + st.Yp[k], st.Xp[k] + st.Y[k]);
        st.g[k] = std::abs(sample.points[k].x - sample.points[k].y) / std::sqrt(2.0);
    }
    return st;
}

ExtremalPoints extremal_points(const PointSample& sample) {
    return extremal_points(sample, point_stats(sample));
}

ExtremalPoints extremal_points(const PointSample& sample, const PointStats& stats) {
    const std::size_t n = sample.points.size();
    if (n == 0) throw std::invalid_argument("extremal_points: empty sample");
    ExtremalPoints out{};
    std::size_t star = 0, bar = 0;
    for (std::size_t k = 1; k < n; ++k) {
        if (stats.f[k] > stats.f[star]) star = k;
        if (stats.g[k] > stats.g[bar]) bar = k;
    }
    out.star_index = star;
    out.bar_index = bar;
    out.h_at_bar = stats.h[bar];
    out.g_at_bar = stats.g[bar];
    out.tilde_index = std::nullopt;
    for (std::size_t k = 0; k < n; ++k) {
        if (sample.points[k].y <= sample.points[k].x) continue;
        if (!out.tilde_index || stats.g[k] > stats.g[*out.tilde_index]) out.tilde_index = k;
    }
    return out;
}

std::string point_sample_to_json(const PointSample& sample) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : sample.points) arr.push_back({p.x, p.y});
    return arr.dump();
}

PointSample point_sample_from_json(const std::string& text) {
    const auto arr = nlohmann::json::parse(text);
    PointSample out;
    out.points.reserve(arr.size());
    for (const auto& item : arr) out.points.push_back({item.at(0).get<double>(), item.at(1).get<double>()});
    return out;
}

} // namespace permlab
