#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace permlab {

// splitmix64 finalizer, used to derive substream seeds from (seed, ids).
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
    std::uint64_t s = mix64(seed ^ mix64(a));
    s = mix64(s ^ mix64(b));
    return mix64(s ^ mix64(c));
}

// Deterministic random stream. mt19937_64 output is pinned by the standard,
// and the bounded-draw / double helpers below avoid std::*_distribution,
// whose algorithms vary between standard libraries.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed = 0) : eng_(seed) {}

    static RngStream substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                               std::uint64_t c = 0) {
        return RngStream(derive_seed(seed, a, b, c));
    }

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0,1) with 53 random bits.
    double next_double() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, bound). Lemire's multiply-shift with rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t x = eng_();
        __uint128_t m = static_cast<__uint128_t>(x) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            std::uint64_t threshold = (0 - bound) % bound;
            while (lo < threshold) {
                x = eng_();
                m = static_cast<__uint128_t>(x) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

  private:
    std::mt19937_64 eng_;
};

// Fisher-Yates into an existing buffer; word[i] = sigma(i+1), values 1..n.
inline void fill_uniform_word(std::vector<int>& word, int n, RngStream& rng) {
    word.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = i + 1;
    for (int i = n - 1; i > 0; --i) {
        auto j = static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(word[static_cast<std::size_t>(i)], word[j]);
    }
}

// Poisson draw by inversion anchored at the mode, O(sqrt(nu)) expected.
// The support is consumed in the order k0, k0+1, k0-1, k0+2, ... which is a
// valid inversion of the reordered mass; neglected tail mass is < 1e-12.
std::int64_t poisson_sample(double nu, RngStream& rng);

} // namespace permlab
