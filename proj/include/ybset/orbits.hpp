#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ybset/quadratic_set.hpp"

namespace ybset {

/// Default cap on the number of tuples a single partition may touch.
inline constexpr std::uint64_t kDefaultOrbitBudget = 10'000'000;

/// Partition of X^m into orbits under the maps r_{m,i} = id^{i-1} x r x id^{m-i-1}.
/// Tuples (x_1,...,x_m) are encoded base n with x_1 as the most significant
/// digit. Orbit ids are assigned in increasing order of each orbit's smallest
/// tuple code, so the partition is independent of how the closure was computed.
struct OrbitPartition {
    int n = 0;
    int m = 0;
    std::vector<int> orbit_id;            ///< tuple code -> orbit id
    std::vector<std::int64_t> orbit_sizes;  ///< indexed by orbit id
    std::int64_t orbit_count = 0;

    std::int64_t tuple_count() const { return static_cast<std::int64_t>(orbit_id.size()); }

    int encode(std::span<const int> tuple) const;
    std::vector<int> decode(std::int64_t code) const;

    /// Orbit sizes as a sorted multiset.
    std::vector<std::int64_t> sizes_sorted() const;

    /// Members of each orbit, ordered by orbit id; members sorted by code.
    std::vector<std::vector<int>> members() const;
};

/// Exact orbit partition of X^m, computed by union-find over all tuples.
/// Throws BudgetExceededError (carrying the required tuple count) when
/// n^m > budget, and BadIndexError for m < 1.
OrbitPartition orbit_partition(const QuadraticSet& qs, int m,
                               std::uint64_t budget = kDefaultOrbitBudget);

/// Number of orbits of X^m, i.e. the dimension of the degree-m component of
/// the structure algebra. dim_A(qs, 0) is 1 by convention.
std::int64_t dim_A(const QuadraticSet& qs, int m, std::uint64_t budget = kDefaultOrbitBudget);

/// Per-degree dimensions with cumulative sums and a finite-window growth
/// estimate. gk_estimate holds d when the (d+1)-th backward difference of the
/// cumulative sums vanishes on the last ceil(m_max/2) degrees while the d-th
/// does not; it is empty ("inconclusive") when no such order is certified by
/// the window. A finite table can only ever estimate the growth order.
struct GrowthTable {
    std::vector<std::int64_t> dims;
    std::vector<std::int64_t> cumulative;
    std::optional<int> gk_estimate;
};

GrowthTable growth_table(const QuadraticSet& qs, int m_max,
                         std::uint64_t budget = kDefaultOrbitBudget);

/// True when no orbit of X^2 contains two pairs sharing a first coordinate or
/// two pairs sharing a second coordinate.
bool is_2_cancellative(const QuadraticSet& qs);

/// dim A_2 == n + n(n-1)/2, the largest value it can take.
bool satisfies_maximality(const QuadraticSet& qs);

}  // namespace ybset
