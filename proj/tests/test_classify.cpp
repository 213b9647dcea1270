#include "doctest.h"

#include <algorithm>
#include <set>

#include "ybset/classify.hpp"
#include "ybset/constructions.hpp"
#include "ybset/orbits.hpp"
#include "ybset/transforms.hpp"

using namespace ybset;

namespace {

// Unpruned census oracle: every sigma assignment, filtered by the braid
// relation (and the fixed-point constraint for quandles), deduplicated by
// canonical form.
std::set<std::vector<int>> naive_census(int n, Family family) {
    std::vector<std::vector<Permutation>> candidates(n);
    std::vector<int> im(n);
    for (int v = 0; v < n; ++v) im[v] = v;
    do {
        const Permutation p{im};
        for (int x = 0; x < n; ++x)
            if (family == Family::rack || p(x) == x) candidates[x].push_back(p);
    } while (std::next_permutation(im.begin(), im.end()));

    std::set<std::vector<int>> forms;
    std::vector<Permutation> chosen;
    auto rec = [&](auto&& self, int level) -> void {
        if (level == n) {
            const QuadraticSet qs = make_sd(chosen);
            if (is_braided(qs, BraidMethod::direct)) forms.insert(canonical_form(qs, n));
            return;
        }
        for (const Permutation& p : candidates[level]) {
            chosen.push_back(p);
            self(self, level + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return forms;
}

std::set<std::vector<int>> catalog_forms(const SolutionCatalog& catalog) {
    std::set<std::vector<int>> forms;
    for (const CatalogEntry& e : catalog.entries) forms.insert(e.canonical_form);
    return forms;
}

}  // namespace

TEST_CASE("census counts") {
    CHECK(enumerate_quandles(1).entries.size() == 1);
    CHECK(enumerate_quandles(2).entries.size() == 1);
    CHECK(enumerate_quandles(3).entries.size() == 3);
    CHECK(enumerate_quandles(4).entries.size() == 7);
    CHECK(enumerate_quandles(5).entries.size() == 22);

    CHECK(enumerate_racks(1).entries.size() == 1);
    CHECK(enumerate_racks(2).entries.size() == 2);
    CHECK(enumerate_racks(3).entries.size() == 6);
    CHECK(enumerate_racks(4).entries.size() == 19);
}

TEST_CASE("pruned search equals the naive census") {
    for (int n : {1, 2, 3}) {
        CHECK(catalog_forms(enumerate_quandles(n)) == naive_census(n, Family::quandle));
        CHECK(catalog_forms(enumerate_racks(n)) == naive_census(n, Family::rack));
    }
    CHECK(catalog_forms(enumerate_quandles(4)) == naive_census(4, Family::quandle));
}

TEST_CASE("catalog entries are valid and pairwise distinct") {
    for (const SolutionCatalog& catalog :
         {enumerate_quandles(4), enumerate_quandles(5), enumerate_racks(3), enumerate_racks(4)}) {
        std::set<std::vector<int>> seen;
        for (const CatalogEntry& entry : catalog.entries) {
            CHECK(seen.insert(entry.canonical_form).second);
            CHECK(is_braided(entry.representative, BraidMethod::direct));
            CHECK(is_sd(entry.representative));
            if (catalog.family == Family::quandle) CHECK(is_square_free(entry.representative));
            CHECK(canonical_form(entry.representative) == entry.canonical_form);
            CHECK(entry.orbit_count == dim_A(entry.representative, 2));
            std::int64_t total = 0;
            for (auto s : entry.orbit_sizes) total += s;
            CHECK(total == catalog.n * catalog.n);
        }
        // entries sorted by canonical form
        CHECK(std::is_sorted(catalog.entries.begin(), catalog.entries.end(),
                             [](const CatalogEntry& a, const CatalogEntry& b) {
                                 return a.canonical_form < b.canonical_form;
                             }));
    }
}

TEST_CASE("pairwise non-isomorphic for small catalogs") {
    const SolutionCatalog catalog = enumerate_racks(4);
    for (std::size_t i = 0; i < catalog.entries.size(); ++i)
        for (std::size_t j = i + 1; j < catalog.entries.size(); ++j)
            CHECK_FALSE(are_isomorphic(catalog.entries[i].representative,
                                       catalog.entries[j].representative)
                            .has_value());
}

TEST_CASE("census membership of the named constructions") {
    const auto q3 = catalog_forms(enumerate_quandles(3));
    CHECK(q3.contains(canonical_form(trivial(3))));
    CHECK(q3.contains(canonical_form(dihedral_quandle(3))));
    CHECK(q3.contains(canonical_form(three_element())));

    const auto r2 = catalog_forms(enumerate_racks(2));
    CHECK(r2.contains(canonical_form(trivial(2))));
    // constant-cycle rack: both sigmas the transposition, one X^2 orbit
    const QuadraticSet cyc2 = make_sd(std::vector<Permutation>(2, Permutation({1, 0})));
    CHECK(r2.contains(canonical_form(cyc2)));
    CHECK(dim_A(cyc2, 2) == 1);
}

TEST_CASE("bounds hold across the censuses") {
    for (int n : {1, 2, 3, 4, 5, 6}) {
        const ClassReport rep = verify_bounds(enumerate_quandles(n));
        CHECK(rep.pass);
    }
    for (int n : {1, 2, 3, 4}) {
        const ClassReport rep = verify_bounds(enumerate_racks(n));
        CHECK(rep.pass);
    }
    // Attained minima: ceil(n/2) for racks at n = 2, 3; 2n-1 for quandles at
    // prime n.
    auto min_count = [](const SolutionCatalog& c) {
        std::int64_t best = -1;
        for (const auto& e : c.entries)
            if (best < 0 || e.orbit_count < best) best = e.orbit_count;
        return best;
    };
    CHECK(min_count(enumerate_racks(2)) == 1);
    CHECK(min_count(enumerate_racks(3)) == 2);
    CHECK(min_count(enumerate_quandles(5)) == 9);
    CHECK(min_count(enumerate_quandles(4)) > 7);
    CHECK(min_count(enumerate_quandles(6)) > 11);
}

TEST_CASE("minimality classification census") {
    for (int n : {2, 3, 4, 5, 6}) {
        const ClassReport rep = verify_minimality_classification(n);
        CHECK(rep.pass);
    }
    CHECK_THROWS_AS(verify_minimality_classification(7), BadIndexError);
    CHECK_THROWS_AS(enumerate_quandles(7), LimitExceededError);
    CHECK_THROWS_AS(enumerate_racks(5), LimitExceededError);
    CHECK_NOTHROW(enumerate_racks(5, 5));
}

TEST_CASE("catalog line format") {
    const std::string lines = catalog_lines(enumerate_quandles(2));
    CHECK(lines ==
          "n=2 family=quandle canonical_form=0,0,1,0,0,1,1,1 orbit_count=3 "
          "two_cancellative=true orbit_sizes=1,1,2\n");
}
