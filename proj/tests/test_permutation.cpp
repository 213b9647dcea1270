#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "ybset/permutation.hpp"

using namespace ybset;

namespace {

Permutation random_permutation(int n, std::mt19937& rng) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    std::shuffle(im.begin(), im.end(), rng);
    return Permutation(im);
}

}  // namespace

TEST_CASE("permutation validation") {
    CHECK_NOTHROW(Permutation({2, 0, 1}));
    CHECK_THROWS_AS(Permutation({0, 0, 1}), BadPermutationError);
    CHECK_THROWS_AS(Permutation({0, 3, 1}), BadPermutationError);
    CHECK_THROWS_AS(Permutation({-1, 0}), BadPermutationError);
}

TEST_CASE("identity and cycles") {
    CHECK(Permutation::identity(4).is_identity());
    const Permutation c = Permutation::from_cycle(5, std::vector<int>{1, 3, 4});
    CHECK(c(1) == 3);
    CHECK(c(3) == 4);
    CHECK(c(4) == 1);
    CHECK(c(0) == 0);
    CHECK(c(2) == 2);
    CHECK(c.cycle_type() == std::vector<int>{1, 1, 3});
    CHECK_THROWS_AS(Permutation::from_cycle(3, std::vector<int>{0, 0}), BadPermutationError);
}

TEST_CASE("composition applies right factor first") {
    const Permutation a({1, 0, 2});
    const Permutation b({0, 2, 1});
    const Permutation ab = a * b;  // a(b(x))
    CHECK(ab(0) == 1);
    CHECK(ab(1) == 2);
    CHECK(ab(2) == 0);
}

TEST_CASE("powers and inverses") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Permutation p = random_permutation(6, rng);
        CHECK((p * p.inverse()).is_identity());
        CHECK(p.pow(0).is_identity());
        CHECK(p.pow(3) == p * p * p);
        CHECK(p.pow(-2) == p.inverse() * p.inverse());
        CHECK(p.pow(5) * p.pow(-5) == Permutation::identity(6));
    }
}
