#include "permlab/moments.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "permlab/statistics.hpp"

namespace permlab {

namespace {

using int128 = __int128;

double to_double(int128 v) {
    if (v < 0) return -to_double(-v);
    const auto hi = static_cast<double>(static_cast<std::uint64_t>(static_cast<unsigned __int128>(v) >> 64));
    const auto lo = static_cast<double>(static_cast<std::uint64_t>(static_cast<unsigned __int128>(v)));
    return hi * 0x1.0p64 + lo;
}

// With S_i = sum_a |a-i|^q and T_i = sum_a |a-i|^{2q}, the same/different
// index decomposition of var rho_q collapses to
//   mean = (sum S) / n,
//   var  = (n^2 sum T - 2 n sum S^2 + (sum S)^2) / (n^2 (n-1)).
// Exact in 128-bit integers while n^{2q+4} stays below ~1.6e38; the long
// double path covers the rest.
NormalizationParams rho_q_moments(int n, int q) {
    NormalizationParams out;
    out.statistic_id = "rho_q";
    out.n = n;
    out.q = q;
    if (n < 2) throw std::invalid_argument("exact_moments: need n >= 2");

    const double digits = (2.0 * q + 4.0) * std::log10(static_cast<double>(n));
    if (digits < 37.5) {
        std::vector<int128> powq(static_cast<std::size_t>(n), 0), pow2q(static_cast<std::size_t>(n), 0);
        for (int d = 0; d < n; ++d) {
            int128 pq = 1, p2q = 1;
            for (int t = 0; t < q; ++t) pq *= d;
            for (int t = 0; t < 2 * q; ++t) p2q *= d;
            powq[static_cast<std::size_t>(d)] = pq;
            pow2q[static_cast<std::size_t>(d)] = p2q;
        }
        // prefix sums: P[m] = sum_{d<=m} d^q
        std::vector<int128> P(static_cast<std::size_t>(n), 0), Q(static_cast<std::size_t>(n), 0);
        for (int d = 1; d < n; ++d) {
            P[static_cast<std::size_t>(d)] = P[static_cast<std::size_t>(d) - 1] + powq[static_cast<std::size_t>(d)];
            Q[static_cast<std::size_t>(d)] = Q[static_cast<std::size_t>(d) - 1] + pow2q[static_cast<std::size_t>(d)];
        }
        int128 sumS = 0, sumS2 = 0, sumT = 0;
        for (int i = 1; i <= n; ++i) {
            const int128 S = P[static_cast<std::size_t>(i) - 1] + P[static_cast<std::size_t>(n - i)];
            const int128 T = Q[static_cast<std::size_t>(i) - 1] + Q[static_cast<std::size_t>(n - i)];
            sumS += S;
            sumS2 += S * S;
            sumT += T;
        }
        const int128 nn = n;
        const int128 var_num = nn * nn * sumT - 2 * nn * sumS2 + sumS * sumS;
        const int128 var_den = nn * nn * (nn - 1);
        out.mean = to_double(sumS) / static_cast<double>(n);
        out.std_dev = std::sqrt(to_double(var_num) / to_double(var_den));
        return out;
    }

    long double sumS = 0, sumS2 = 0, sumT = 0;
    std::vector<long double> P(static_cast<std::size_t>(n), 0), Q(static_cast<std::size_t>(n), 0);
    for (int d = 1; d < n; ++d) {
        P[static_cast<std::size_t>(d)] =
            P[static_cast<std::size_t>(d) - 1] + std::pow(static_cast<long double>(d), q);
        Q[static_cast<std::size_t>(d)] =
            Q[static_cast<std::size_t>(d) - 1] + std::pow(static_cast<long double>(d), 2 * q);
    }
    for (int i = 1; i <= n; ++i) {
        const long double S = P[static_cast<std::size_t>(i) - 1] + P[static_cast<std::size_t>(n - i)];
        const long double T = Q[static_cast<std::size_t>(i) - 1] + Q[static_cast<std::size_t>(n - i)];
        sumS += S;
        sumS2 += S * S;
        sumT += T;
    }
    const long double nn = n;
    out.mean = static_cast<double>(sumS / nn);
    out.std_dev = static_cast<double>(
        std::sqrt((nn * nn * sumT - 2 * nn * sumS2 + sumS * sumS) / (nn * nn * (nn - 1))));
    return out;
}

NormalizationParams kendall_moments(int n) {
    NormalizationParams out;
    out.statistic_id = "kendall_tau";
    out.n = n;
    const auto nn = static_cast<std::int64_t>(n);
    out.mean = static_cast<double>(nn * (nn - 1)) / 4.0;
    out.std_dev = std::sqrt(static_cast<double>(nn * (nn - 1) * (2 * nn + 5)) / 72.0);
    return out;
}

NormalizationParams cycle_count_moments(int n) {
    NormalizationParams out;
    out.statistic_id = "cycle_count";
    out.n = n;
    if (n <= 30) {
        // exact rational accumulation; denominators stay within 128 bits
        int128 num_m = 0, den_m = 1, num_v = 0, den_v = 1;
        auto gcd128 = [](int128 a, int128 b) {
            if (a < 0) a = -a;
            while (b != 0) {
                const int128 t = a % b;
                a = b;
                b = t;
            }
            return a;
        };
        for (int k = 1; k <= n; ++k) {
            num_m = num_m * k + den_m;
            den_m *= k;
            int128 g = gcd128(num_m, den_m);
            num_m /= g;
            den_m /= g;
            const int128 kk = static_cast<int128>(k) * k;
            num_v = num_v * kk + (static_cast<int128>(k) - 1) * den_v;
            den_v *= kk;
            g = gcd128(num_v, den_v);
            num_v /= g;
            den_v /= g;
        }
        out.mean = to_double(num_m) / to_double(den_m);
        out.std_dev = std::sqrt(to_double(num_v) / to_double(den_v));
    } else {
        long double h = 0, v = 0;
        for (int k = 1; k <= n; ++k) {
            h += 1.0L / k;
            v += 1.0L / k - 1.0L / (static_cast<long double>(k) * k);
        }
        out.mean = static_cast<double>(h);
        out.std_dev = static_cast<double>(std::sqrt(v));
    }
    return out;
}

} // namespace

NormalizationParams exact_moments(int n, const std::string& statistic_id, int q) {
    if (statistic_id == "rho_q") {
        if (q < 1) throw std::invalid_argument("exact_moments: rho_q requires q >= 1");
        return rho_q_moments(n, q);
    }
    if (statistic_id == "kendall_tau") return kendall_moments(n);
    if (statistic_id == "cycle_count") return cycle_count_moments(n);
    throw std::invalid_argument("exact_moments: unsupported statistic '" + statistic_id + "'");
}

NormalizationParams mc_moments(int n, const std::string& statistic_id, int q, long samples,
                               RngStream rng) {
    if (samples < 2) throw std::invalid_argument("mc_moments: need at least 2 samples");
    std::vector<int> word;
    double sum = 0, sum2 = 0;
    for (long s = 0; s < samples; ++s) {
        fill_uniform_word(word, n, rng);
        double v = 0;
        if (statistic_id == "rho_q") {
            v = static_cast<double>(spearman_rho_q(word, q));
        } else if (statistic_id == "kendall_tau") {
            v = static_cast<double>(kendall_tau(word));
        } else if (statistic_id == "cycle_count") {
            v = static_cast<double>(class_statistics(word).cycle_count);
        } else if (statistic_id == "rho_q_square") {
            Permutation p = Permutation::from_word_unchecked(word);
            v = static_cast<double>(rho_q_on_square(p, q));
            word = p.word();
        } else if (statistic_id == "oscillation") {
            v = static_cast<double>(oscillation(word, q, 1));
        } else {
            throw std::invalid_argument("mc_moments: unsupported statistic '" + statistic_id + "'");
        }
        sum += v;
        sum2 += v * v;
    }
    const auto m = static_cast<double>(samples);
    const double mean = sum / m;
    const double var = std::max(0.0, (sum2 - m * mean * mean) / (m - 1));
    NormalizationParams out;
    out.statistic_id = statistic_id;
    out.n = n;
    out.q = q;
    out.mean = mean;
    out.std_dev = std::sqrt(var);
    out.method = MomentMethod::monte_carlo;
    out.mean_std_err = out.std_dev / std::sqrt(m);
    out.sd_std_err = out.std_dev / std::sqrt(2.0 * (m - 1));
    return out;
}

double normalize(double value, const NormalizationParams& params) {
    if (!(params.std_dev > 0)) throw std::invalid_argument("normalize: std_dev must be positive");
    return (value - params.mean) / params.std_dev;
}

} // namespace permlab
