#include "doctest.h"

#include <algorithm>

#include "ybset/constructions.hpp"
#include "ybset/orbits.hpp"
#include "ybset/transforms.hpp"

using namespace ybset;

TEST_CASE("trivial") {
    CHECK(trivial(1) == make_from_r_table(1, {{0, 0}}));
    CHECK(dim_A(trivial(2), 2) == 3);
    CHECK(satisfies_maximality(trivial(4)));
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) CHECK(trivial(3).apply(x, y) == std::pair{y, x});
}

TEST_CASE("dihedral quandle") {
    CHECK(dihedral_quandle(2) == trivial(2));
    CHECK(dim_A(dihedral_quandle(5), 2) == 9);
    CHECK(dim_A(dihedral_quandle(9), 2) == 21);
    for (int n : {2, 3, 4, 5, 6, 7}) {
        const QuadraticSet d = dihedral_quandle(n);
        CHECK(is_square_free(d));
        CHECK(is_sd(d));
        CHECK(is_braided(d));
        CHECK(is_2_cancellative(d));
    }
}

TEST_CASE("cyclic permutation example") {
    for (int n : {2, 3, 4, 5}) {
        const QuadraticSet qs = cyclic_perm_example(n);
        CHECK(is_non_degenerate(qs));
        CHECK(is_sd(qs));
        for (int m = 2; m <= 4; ++m) CHECK(dim_A(qs, m) == 1);
    }
    for (int n : {3, 4, 5}) CHECK_FALSE(is_braided(cyclic_perm_example(n)));
    // n = 2 collapses to the constant-cycle rack, which is braided.
    CHECK(is_braided(cyclic_perm_example(2)));
    CHECK(cyclic_perm_example(2).sigma(0) == Permutation({1, 0}));
    CHECK(cyclic_perm_example(2).sigma(1) == Permutation({1, 0}));
}

TEST_CASE("square-free floor example") {
    for (int n : {2, 3, 4, 5}) {
        const QuadraticSet qs = squarefree_example(n);
        CHECK(is_square_free(qs));
        CHECK(is_non_degenerate(qs));
        CHECK(dim_A(qs, 2) == n + 1);
    }
    CHECK(dim_A(squarefree_example(5), 3) == 6);
}

TEST_CASE("shift and skew shift") {
    const QuadraticSet sh = shift_solution(5);
    CHECK(is_sd(sh));
    CHECK(is_braided(sh));
    CHECK_FALSE(is_square_free(sh));
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y) CHECK(sh.apply(x, y) == std::pair{(y + 1) % 5, x});

    for (int n : {4, 5, 6}) {
        const QuadraticSet sk = skew_shift(n);
        CHECK(is_braided(sk));
        CHECK(is_non_degenerate(sk));
        CHECK_FALSE(is_sd(sk));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                CHECK(sk.apply(x, y) == std::pair{(y + n - 1) % n, (x + 2) % n});
    }
}

TEST_CASE("three element") {
    const QuadraticSet te = three_element();
    CHECK(is_square_free(te));
    CHECK(is_sd(te));
    CHECK(is_braided(te));
    CHECK(dim_A(te, 2) == 5);
    CHECK(dim_A(te, 3) == 7);
    // The four-element orbit repeats the first coordinate 2, so the set is
    // not 2-cancellative: (2,0) and (2,1) lie in one orbit.
    CHECK_FALSE(is_2_cancellative(te));
    const OrbitPartition part = orbit_partition(te, 2);
    CHECK(part.orbit_id[part.encode(std::vector<int>{2, 0})] ==
          part.orbit_id[part.encode(std::vector<int>{2, 1})]);
}

TEST_CASE("cycle extension counts") {
    CHECK(cycle_extension(2).size() == 1);
    CHECK(cycle_extension(3).size() == 1);
    CHECK(cycle_extension(5).size() == 1);
    CHECK(cycle_extension(6).size() == 1);
    CHECK(cycle_extension(4).size() == 2);
    CHECK(cycle_extension(7).size() == 1);
    CHECK(cycle_extension(8).size() == 2);
    CHECK(cycle_extension(12).size() == 2);

    // Odd n: the unique solution is the dihedral quandle, on the nose.
    for (int n : {3, 5, 7, 9}) {
        const auto sols = cycle_extension(n);
        REQUIRE(sols.size() == 1);
        CHECK(sols[0] == dihedral_quandle(n));
    }
    CHECK(cycle_extension(6)[0] == dihedral_quandle(6));
    CHECK(cycle_extension(8)[0] == dihedral_quandle(8));

    const auto n8 = cycle_extension(8);
    CHECK_FALSE(are_isomorphic(n8[0], n8[1]).has_value());
}

TEST_CASE("cycle extension output profile") {
    for (int n : {2, 3, 5, 6, 8}) {
        for (const QuadraticSet& qs : cycle_extension(n)) {
            CHECK(is_sd(qs));
            CHECK(is_braided(qs));
            for (int x = 0; x < n; ++x) CHECK((qs.sigma(x) * qs.sigma(x)).is_identity());
            const auto sizes = orbit_partition(qs, 2).sizes_sorted();
            CHECK(std::count(sizes.begin(), sizes.end(), n) >= 1);
        }
    }
}

TEST_CASE("cycle extension first output extends the chain") {
    for (int n : {2, 3, 4, 5, 6, 7, 8}) {
        const QuadraticSet qs = cycle_extension(n)[0];
        for (int i = 0; i + 2 < n; ++i)
            CHECK(qs.apply((i + 1) % n, i) == std::pair{i + 2, i + 1});
        CHECK(qs.apply(n - 1, n - 2) == std::pair{0, n - 1});
        CHECK(qs.apply(0, n - 1) == std::pair{1, 0});
    }
}
