#include "permlab/cycle_bijections.hpp"

#include <stdexcept>

#include "permlab/record_maps.hpp"

namespace permlab {

namespace {

std::vector<int> rethread(const std::vector<int>& c) {
    std::vector<int> out;
    out.reserve(c.size());
    for (std::size_t k = 0; k < c.size(); k += 2) out.push_back(c[k]);
    for (std::size_t k = 1; k < c.size(); k += 2) out.push_back(c[k]);
    return out;
}

} // namespace

Permutation sqrt_rearrangement(const Permutation& p) {
    RecordCycleForm rf = record_form(p);
    std::vector<std::vector<int>> out_cycles;
    out_cycles.reserve(rf.cycles.size());
    for (const auto& c : rf.cycles) out_cycles.push_back(rethread(c));
    return Permutation::from_cycles(p.size(), out_cycles);
}

Permutation bracket_split(const Permutation& p) {
    RecordCycleForm rf = record_form(p);
    std::vector<std::vector<int>> out_cycles;
    for (const auto& c : rf.cycles) {
        if (c.size() % 2 == 0 && c.size() >= 2) {
            const std::size_t half = c.size() / 2;
            out_cycles.emplace_back(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(half));
            out_cycles.emplace_back(c.begin() + static_cast<std::ptrdiff_t>(half), c.end());
        } else {
            out_cycles.push_back(c);
        }
    }
    return Permutation::from_cycles(p.size(), out_cycles);
}

Permutation cyclify(const Permutation& sigma, int i0) {
    const int n = sigma.size();
    if (i0 < 1 || i0 > n) throw std::invalid_argument("cyclify: i0 out of range");
    const auto& w = sigma.word();
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        int a = w[static_cast<std::size_t>(k)];
        int b = w[static_cast<std::size_t>((k + 1) % n)];
        out[static_cast<std::size_t>(a) - 1] = b;
    }
    return Permutation::from_word_unchecked(std::move(out));
}

Permutation crp_extend(const Permutation& sigma, RngStream& rng) {
    const int n = sigma.size();
    const double u = rng.next_double();
    const auto k = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(std::max(n, 1)))) + 1;

    std::vector<int> w = sigma.word();
    w.push_back(n + 1);
    const bool fixed_point = u * static_cast<double>(n + 1) < 1.0;
    if (!fixed_point && n >= 1) {
        w[static_cast<std::size_t>(n)] = w[static_cast<std::size_t>(k) - 1]; // tau(n+1) = sigma(k)
        w[static_cast<std::size_t>(k) - 1] = n + 1;                          // tau(k) = n+1
    }
    return Permutation::from_word_unchecked(std::move(w));
}

} // namespace permlab
