#include <doctest.h>

#include <stdexcept>

#include <set>

#include "permlab/partition.hpp"
#include "permlab/permutation.hpp"
#include "permlab/serialize.hpp"

using namespace permlab;

TEST_CASE("group operations") {
    const Permutation id3 = Permutation::identity(3);
    const Permutation c{std::vector<int>{2, 3, 1}};

    CHECK(compose(id3, c) == c);
    CHECK(compose(c, id3) == c);
    CHECK(square(c) == Permutation{std::vector<int>{3, 1, 2}});
    CHECK(inverse(Permutation{std::vector<int>{3, 1, 2}}) == c);
    CHECK(compose(c, inverse(c)) == id3);

    CHECK_THROWS_AS(compose(id3, Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("word validation") {
    CHECK_THROWS_AS((Permutation{std::vector<int>{1, 1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS((Permutation{std::vector<int>{0, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS((Permutation{std::vector<int>{2, 3, 4}}), std::invalid_argument);
    CHECK(is_valid_word(std::vector<int>{2, 1}));
}

TEST_CASE("cycles and cycle type") {
    const Permutation p{std::vector<int>{2, 1, 4, 3}};
    const auto cycles = cycles_of(p);
    REQUIRE(cycles.size() == 2);
    CHECK(cycles[0] == std::vector<int>{1, 2});
    CHECK(cycles[1] == std::vector<int>{3, 4});
    CHECK(cycle_type(p) == Partition({2, 2}));

    CHECK(Permutation::from_cycles(4, {{1, 2}, {3, 4}}) == p);
    CHECK(Permutation::from_cycles(3, {}) == Permutation::identity(3));
    CHECK_THROWS_AS(Permutation::from_cycles(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("partitions") {
    CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({3, 0}), std::invalid_argument);
    CHECK(Partition({3, 2}).n() == 5);
    CHECK(Partition({3, 2, 2}).multiplicities() == std::vector<int>{0, 2, 1});
    CHECK(Partition::balanced(7, 3) == Partition({3, 2, 2}));
    CHECK(Partition::all_ones(3) == Partition({1, 1, 1}));

    // p(6) = 11
    CHECK(partitions_of(6).size() == 11);
    // |S_5^{(3,2)}| = 5!/(3*2) = 20
    CHECK(conjugacy_class_size(Partition({3, 2})) == 20);
    CHECK(conjugacy_class_size(Partition({1, 1, 1, 1})) == 1);
}

TEST_CASE("uniform sampler produces valid permutations") {
    RngStream rng(9);
    std::set<std::vector<int>> seen;
    for (int rep = 0; rep < 200; ++rep) {
        const Permutation p = uniform_permutation(6, rng);
        CHECK(is_valid_word(p.span()));
        seen.insert(p.word());
    }
    CHECK(seen.size() > 150); // far more than a degenerate sampler would hit
}

TEST_CASE("json wire format round trips") {
    const Permutation p{std::vector<int>{3, 1, 2}};
    CHECK(permutation_to_json(p) == "[3,1,2]");
    CHECK(permutation_from_json("[3,1,2]") == p);
    CHECK_THROWS(permutation_from_json("[3,3,1]"));

    const Partition lam({4, 2, 1});
    CHECK(partition_to_json(lam) == "[4,2,1]");
    CHECK(partition_from_json("[4,2,1]") == lam);
}
