#include "permlab/permutation.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace permlab {

bool is_valid_word(std::span<const int> word) {
    const auto n = static_cast<int>(word.size());
    std::vector<char> seen(word.size(), 0);
    for (int v : word) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v) - 1]) return false;
        seen[static_cast<std::size_t>(v) - 1] = 1;
    }
    return true;
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    if (!is_valid_word(word_)) throw std::invalid_argument("Permutation: word is not a bijection of 1..n");
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    return from_word_unchecked(std::move(w));
}

Permutation Permutation::from_word_unchecked(std::vector<int> word) {
    Permutation p;
    p.word_ = std::move(word);
    return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (const auto& c : cycles) {
        if (c.empty()) throw std::invalid_argument("from_cycles: empty cycle");
        for (std::size_t k = 0; k < c.size(); ++k) {
            int a = c[k];
            int b = c[(k + 1) % c.size()];
            if (a < 1 || a > n) throw std::invalid_argument("from_cycles: symbol out of range");
            if (used[static_cast<std::size_t>(a) - 1])
                throw std::invalid_argument("from_cycles: repeated symbol");
            used[static_cast<std::size_t>(a) - 1] = 1;
            w[static_cast<std::size_t>(a) - 1] = b;
        }
    }
    return Permutation(std::move(w));
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
    const int n = a.size();
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i) - 1] = a(b(i));
    return Permutation::from_word_unchecked(std::move(w));
}

Permutation inverse(const Permutation& p) {
    const int n = p.size();
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(p(i)) - 1] = i;
    return Permutation::from_word_unchecked(std::move(w));
}

Permutation square(const Permutation& p) { return compose(p, p); }

std::vector<std::vector<int>> cycles_of(std::span<const int> word) {
    const auto n = static_cast<int>(word.size());
    std::vector<char> visited(word.size(), 0);
    std::vector<std::vector<int>> cycles;
    for (int s = 1; s <= n; ++s) {
        if (visited[static_cast<std::size_t>(s) - 1]) continue;
        std::vector<int> cyc;
        int i = s;
        while (!visited[static_cast<std::size_t>(i) - 1]) {
            visited[static_cast<std::size_t>(i) - 1] = 1;
            cyc.push_back(i);
            i = word[static_cast<std::size_t>(i) - 1];
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

Permutation uniform_permutation(int n, RngStream& rng) {
    std::vector<int> w;
    fill_uniform_word(w, n, rng);
    return Permutation::from_word_unchecked(std::move(w));
}

std::string to_string(const Permutation& p) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < p.size(); ++i) {
        if (i) os << ',';
        os << p.word()[static_cast<std::size_t>(i)];
    }
    os << ']';
    return os.str();
}

} // namespace permlab
