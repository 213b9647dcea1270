#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ybset/quadratic_set.hpp"

namespace ybset {

enum class Family { quandle, rack };

inline const char* family_name(Family f) { return f == Family::quandle ? "quandle" : "rack"; }

inline constexpr int kDefaultQuandleLimit = 6;
inline constexpr int kDefaultRackLimit = 4;

struct CatalogEntry {
    std::vector<int> canonical_form;
    QuadraticSet representative;  ///< rebuilt from the canonical form
    std::int64_t orbit_count = 0;
    bool two_cancellative = false;
    std::vector<std::int64_t> orbit_sizes;  ///< sorted multiset
};

/// Isomorphism-free list of SD braided sets of one size, sorted by canonical
/// form so the catalog is independent of the search order that produced it.
struct SolutionCatalog {
    int n = 0;
    Family family = Family::quandle;
    std::vector<CatalogEntry> entries;
};

/// All square-free SD braided sets on {0..n-1} up to isomorphism.
///
/// Backtracking assigns sigma_x in index order over permutations fixing x
/// (iterated in lexicographic one-line order), pruned by the conjugation law
/// sigma_x sigma_y sigma_x^{-1} = sigma_{sigma_x(y)} on every decided pair;
/// images the law forces at not-yet-assigned indices are recorded and pin the
/// later choice. Deduplication is by canonical form during the search.
/// Throws LimitExceededError when n > limit.
SolutionCatalog enumerate_quandles(int n, int limit = kDefaultQuandleLimit);

/// All SD braided sets on {0..n-1} up to isomorphism; same search without the
/// fixed-point constraint. The unpruned space is (n!)^n, hence the lower
/// default limit.
SolutionCatalog enumerate_racks(int n, int limit = kDefaultRackLimit);

/// The smallest number of X^2 orbits the family admits at size n: ceil(n/2)
/// for racks and 2n-1 for quandles.
std::int64_t family_lower_bound(Family family, int n);

struct ClassReport {
    bool pass = true;
    std::vector<std::string> lines;
};

/// Checks every catalog entry against the family's lower bound; for racks the
/// bound may be attained only when all sigma_x equal one n-cycle, and that
/// equality case is asserted too.
ClassReport verify_bounds(const SolutionCatalog& catalog);

/// Filters the quandle census at n to entries with exactly 2n-1 orbits and
/// compares the survivor set, via canonical forms, against the expected
/// classification: {trivial(2)} at n=2, {dihedral(3), three_element} at n=3,
/// nothing at n=4 and n=6, {dihedral(5)} at n=5. Supported for 2 <= n <= 6.
ClassReport verify_minimality_classification(int n, int limit = kDefaultQuandleLimit);

/// One record per entry: `n=.. family=.. canonical_form=c0,c1,...
/// orbit_count=.. two_cancellative=true|false orbit_sizes=s0,s1,...`.
std::string catalog_lines(const SolutionCatalog& catalog);

}  // namespace ybset
