#pragma once

#include <span>
#include <string>
#include <vector>

#include "permlab/rng.hpp"

namespace permlab {

// A permutation of [n] stored as its one-line word: word[i-1] = sigma(i),
// with symbols 1..n. All interfaces are 1-based.
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word); // validates bijection
    static Permutation identity(int n);
    // Skips validation; for samplers and maps that construct valid words.
    static Permutation from_word_unchecked(std::vector<int> word);
    // Disjoint cycles over a subset of [n]; unlisted symbols are fixed points.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int size() const { return static_cast<int>(word_.size()); }
    int operator()(int i) const { return word_[static_cast<std::size_t>(i) - 1]; }
    const std::vector<int>& word() const { return word_; }
    std::span<const int> span() const { return word_; }

    bool operator==(const Permutation&) const = default;

  private:
    std::vector<int> word_;
};

bool is_valid_word(std::span<const int> word);

Permutation compose(const Permutation& a, const Permutation& b); // (a*b)(i) = a(b(i))
Permutation inverse(const Permutation& p);
Permutation square(const Permutation& p);

// Cycles in discovery order (smallest unvisited symbol starts each cycle).
std::vector<std::vector<int>> cycles_of(std::span<const int> word);
inline std::vector<std::vector<int>> cycles_of(const Permutation& p) { return cycles_of(p.span()); }

Permutation uniform_permutation(int n, RngStream& rng);

std::string to_string(const Permutation& p);

} // namespace permlab
