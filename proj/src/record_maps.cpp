#include "permlab/record_maps.hpp"

#include <algorithm>
#include <stdexcept>

namespace permlab {

bool RecordCycleForm::valid(int n) const {
    int prev_lead = 0;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int count = 0;
    for (const auto& c : cycles) {
        if (c.empty()) return false;
        int lead = c.front();
        if (lead <= prev_lead) return false;
        prev_lead = lead;
        for (int v : c) {
            if (v < 1 || v > n || v > lead) return false;
            if (seen[static_cast<std::size_t>(v) - 1]) return false;
            seen[static_cast<std::size_t>(v) - 1] = 1;
            ++count;
        }
    }
    return count == n;
}

std::vector<int> RecordCycleForm::concatenated() const {
    std::vector<int> w;
    for (const auto& c : cycles)
        for (int v : c) w.push_back(v);
    return w;
}

RecordCycleForm record_form(const Permutation& p) {
    RecordCycleForm rf;
    rf.cycles = cycles_of(p);
    for (auto& c : rf.cycles) {
        auto mx = std::max_element(c.begin(), c.end());
        std::rotate(c.begin(), mx, c.end());
    }
    std::sort(rf.cycles.begin(), rf.cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return rf;
}

Permutation record_map(const Permutation& p) {
    return Permutation::from_word_unchecked(record_form(p).concatenated());
}

Permutation conjugated_record_map(const Permutation& sigma, const Permutation& tau) {
    if (sigma.size() != tau.size())
        throw std::invalid_argument("conjugated_record_map: size mismatch");
    Permutation tau_inv = inverse(tau);
    Permutation conj = compose(tau, compose(sigma, tau_inv));
    return compose(tau_inv, compose(record_map(conj), tau));
}

Permutation bracket_insertion(const Permutation& sigma, const Partition& lambda) {
    const int n = sigma.size();
    if (lambda.n() != n) throw std::invalid_argument("bracket_insertion: lambda does not partition n");
    const auto& w = sigma.word();
    std::vector<int> out(static_cast<std::size_t>(n));
    std::size_t pos = 0;
    for (int part : lambda.parts()) {
        const std::size_t len = static_cast<std::size_t>(part);
        for (std::size_t k = 0; k < len; ++k) {
            int a = w[pos + k];
            int b = w[pos + (k + 1) % len];
            out[static_cast<std::size_t>(a) - 1] = b;
        }
        pos += len;
    }
    return Permutation::from_word_unchecked(std::move(out));
}

Permutation conditional_class_map(const Permutation& sigma, const Partition& lambda) {
    return bracket_insertion(record_map(sigma), lambda);
}

Permutation symmetrized_class_map(const Permutation& sigma, const Permutation& tau1,
                                  const Permutation& tau2, const Partition& lambda) {
    const int n = sigma.size();
    if (tau1.size() != n || tau2.size() != n || lambda.n() != n)
        throw std::invalid_argument("symmetrized_class_map: size mismatch");
    Permutation stage = conjugated_record_map(sigma, tau1);
    stage = bracket_insertion(stage, Partition::single_cycle(n));
    stage = conjugated_record_map(stage, tau2);
    return bracket_insertion(stage, lambda);
}

} // namespace permlab
