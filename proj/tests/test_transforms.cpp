#include "doctest.h"

#include <numeric>
#include <random>

#include "ybset/constructions.hpp"
#include "ybset/orbits.hpp"
#include "ybset/transforms.hpp"

using namespace ybset;

namespace {

Permutation random_permutation(int n, std::mt19937& rng) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    std::shuffle(im.begin(), im.end(), rng);
    return Permutation(im);
}

std::vector<QuadraticSet> braided_samples() {
    return {trivial(4),          dihedral_quandle(5), dihedral_quandle(6), three_element(),
            shift_solution(5),   skew_shift(4),       skew_shift(5),       skew_shift(6),
            cycle_extension(8)[1]};
}

}  // namespace

TEST_CASE("derived solution") {
    // SD inputs are fixed points of the construction.
    for (const QuadraticSet& qs : {dihedral_quandle(5), three_element(), shift_solution(4)})
        CHECK(derived_solution(qs) == qs);

    // skew-shift derives to the shift.
    for (int n : {4, 5, 6}) CHECK(derived_solution(skew_shift(n)) == shift_solution(n));

    // Involutive braided inputs derive to the flip: Lyubashenko-style
    // r(x,y) = (f(y), f^{-1}(x)) with f the +1 cycle on Z/4.
    std::vector<int> f_im{1, 2, 3, 0};
    std::vector<int> finv_im{3, 0, 1, 2};
    const QuadraticSet lyu = make_from_sigma_gamma(
        std::vector<Permutation>(4, Permutation(f_im)),
        std::vector<Permutation>(4, Permutation(finv_im)));
    REQUIRE(is_braided(lyu));
    REQUIRE(is_involutive(lyu));
    CHECK(derived_solution(lyu) == trivial(4));

    CHECK_THROWS_AS(derived_solution(cyclic_perm_example(4)), RequiresBraidedError);
    const QuadraticSet degenerate = make_from_r_table(2, {{0, 1}, {0, 0}, {1, 0}, {1, 1}});
    CHECK_THROWS_AS(derived_solution(degenerate), RequiresNonDegenerateError);
}

TEST_CASE("derived solution properties") {
    for (const QuadraticSet& qs : braided_samples()) {
        const QuadraticSet der = derived_solution(qs);
        CHECK(is_sd(der));
        CHECK(is_braided(der));
        CHECK(derived_solution(der) == der);  // idempotent
        if (is_square_free(qs)) CHECK(is_square_free(der));
        for (int m = 2; m <= 4; ++m) CHECK(dim_A(qs, m) == dim_A(der, m));
    }
}

TEST_CASE("retraction") {
    for (int n : {3, 4, 6}) {
        const Retraction ret = retraction(shift_solution(n));
        CHECK(ret.quotient.size() == 1);
        CHECK(ret.class_map == std::vector<int>(n, 0));
    }

    for (int p : {3, 5, 7}) CHECK(retraction(dihedral_quandle(p)).quotient.size() == p);

    const Retraction te = retraction(three_element());
    CHECK(te.quotient.size() == 2);
    CHECK(te.class_map == std::vector<int>{0, 0, 1});
    CHECK(te.quotient == trivial(2));

    CHECK_THROWS_AS(retraction(cyclic_perm_example(4)), RequiresBraidedError);
    CHECK_THROWS_AS(retraction(make_from_r_table(2, {{0, 1}, {0, 0}, {1, 0}, {1, 1}})),
                    RequiresNonDegenerateError);
}

TEST_CASE("retraction of SD is SD") {
    for (const QuadraticSet& qs : braided_samples())
        if (is_sd(qs)) CHECK(is_sd(retraction(qs).quotient));
}

TEST_CASE("multipermutation level") {
    CHECK(multipermutation_level(make_from_r_table(1, {{0, 0}})) == 0);
    CHECK(multipermutation_level(shift_solution(4)) == 1);
    CHECK(multipermutation_level(three_element()) == 2);
    CHECK(multipermutation_level(trivial(2)) == 1);
    for (int p : {3, 5, 7}) CHECK_FALSE(multipermutation_level(dihedral_quandle(p)).has_value());
}

TEST_CASE("permutation group") {
    CHECK(permutation_group(trivial(5), GeneratorFamily::sigma).order() == 1);
    for (int p : {3, 5, 7})
        CHECK(permutation_group(dihedral_quandle(p), GeneratorFamily::sigma).order() == 2 * p);
    const PermutationGroup g = permutation_group(three_element(), GeneratorFamily::sigma);
    CHECK(g.order() == 2);
    CHECK(g.contains(Permutation({1, 0, 2})));
    CHECK(g.contains(Permutation::identity(3)));

    const QuadraticSet degenerate = make_from_r_table(2, {{0, 1}, {0, 0}, {1, 0}, {1, 1}});
    CHECK_THROWS_AS(permutation_group(degenerate, GeneratorFamily::sigma),
                    RequiresNonDegenerateError);
    CHECK_NOTHROW(permutation_group(degenerate, GeneratorFamily::gamma));
}

TEST_CASE("indecomposable") {
    for (int n : {3, 4, 6}) CHECK(is_indecomposable(shift_solution(n)));
    for (int n : {2, 3, 5}) CHECK_FALSE(is_indecomposable(trivial(n)));
    for (int p : {3, 5, 7}) CHECK(is_indecomposable(dihedral_quandle(p)));
    CHECK_FALSE(is_indecomposable(three_element()));
}

TEST_CASE("isomorphism witnesses") {
    const QuadraticSet d5 = dihedral_quandle(5);
    const auto self = are_isomorphic(d5, d5);
    REQUIRE(self.has_value());
    CHECK(self->is_identity());

    CHECK_FALSE(are_isomorphic(dihedral_quandle(3), three_element()).has_value());
    CHECK_FALSE(are_isomorphic(d5, dihedral_quandle(6)).has_value());

    std::mt19937 rng(13);
    for (const QuadraticSet& qs : braided_samples()) {
        const Permutation f = random_permutation(qs.size(), rng);
        const QuadraticSet moved = relabel(qs, f);
        const auto witness = are_isomorphic(qs, moved);
        REQUIRE(witness.has_value());
        CHECK(relabel(qs, *witness) == moved);
        // symmetry
        CHECK(are_isomorphic(moved, qs).has_value());
    }
}

TEST_CASE("isomorphic sets share invariants") {
    std::mt19937 rng(17);
    for (const QuadraticSet& qs : braided_samples()) {
        const QuadraticSet moved = relabel(qs, random_permutation(qs.size(), rng));
        CHECK(is_braided(qs) == is_braided(moved));
        CHECK(is_square_free(qs) == is_square_free(moved));
        CHECK(is_involutive(qs) == is_involutive(moved));
        CHECK(is_sd(qs) == is_sd(moved));
        for (int m = 2; m <= 3; ++m) CHECK(dim_A(qs, m) == dim_A(moved, m));
        if (qs.size() <= kDefaultCanonicalLimit)
            CHECK(canonical_form(qs) == canonical_form(moved));
    }
}

TEST_CASE("canonical forms") {
    CHECK(canonical_form(make_from_r_table(1, {{0, 0}})) == std::vector<int>{0, 0});

    const QuadraticSet flip2 = trivial(2);
    CHECK(canonical_form(flip2) == std::vector<int>{0, 0, 1, 0, 0, 1, 1, 1});

    const QuadraticSet d3 = dihedral_quandle(3);
    CHECK(canonical_form(d3) == canonical_form(relabel(d3, Permutation({2, 0, 1}))));

    // Equal canonical forms characterize isomorphism on a mixed pool.
    const std::vector<QuadraticSet> pool{trivial(3),          dihedral_quandle(3),
                                         three_element(),     cyclic_perm_example(3),
                                         squarefree_example(3)};
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = 0; j < pool.size(); ++j)
            CHECK((canonical_form(pool[i]) == canonical_form(pool[j])) ==
                  are_isomorphic(pool[i], pool[j]).has_value());

    CHECK_THROWS_AS(canonical_form(dihedral_quandle(9)), LimitExceededError);
    CHECK_NOTHROW(canonical_form(dihedral_quandle(9), 9));

    // Round trip through the flattening.
    const std::vector<int> form = canonical_form(d3);
    CHECK(canonical_form(from_flat_table(3, form)) == form);
}
