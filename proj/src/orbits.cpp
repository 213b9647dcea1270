#include "ybset/orbits.hpp"

#include <algorithm>
#include <string>

namespace ybset {

int OrbitPartition::encode(std::span<const int> tuple) const {
    int code = 0;
    for (int digit : tuple) code = code * n + digit;
    return code;
}

std::vector<int> OrbitPartition::decode(std::int64_t code) const {
    std::vector<int> tuple(m);
    for (int j = m - 1; j >= 0; --j) {
        tuple[j] = static_cast<int>(code % n);
        code /= n;
    }
    return tuple;
}

std::vector<std::int64_t> OrbitPartition::sizes_sorted() const {
    std::vector<std::int64_t> s = orbit_sizes;
    std::sort(s.begin(), s.end());
    return s;
}

std::vector<std::vector<int>> OrbitPartition::members() const {
    std::vector<std::vector<int>> out(orbit_sizes.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i].reserve(static_cast<std::size_t>(orbit_sizes[i]));
    for (std::int64_t code = 0; code < tuple_count(); ++code)
        out[orbit_id[code]].push_back(static_cast<int>(code));
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(std::int64_t size) : parent(size) {
        for (std::int64_t i = 0; i < size; ++i) parent[i] = static_cast<int>(i);
    }
    int find(int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

OrbitPartition orbit_partition(const QuadraticSet& qs, int m, std::uint64_t budget) {
    if (m < 1) throw BadIndexError("degree m must be >= 1");
    const int n = qs.size();
    constexpr std::uint64_t kHardCap = (1u << 31) - 2;  // union-find uses 32-bit indices
    unsigned __int128 exact = 1;
    for (int i = 0; i < m && exact <= kHardCap; ++i) exact *= static_cast<unsigned>(n);
    const std::uint64_t total =
        exact > kHardCap ? ~static_cast<std::uint64_t>(0) : static_cast<std::uint64_t>(exact);
    if (total > budget || total > kHardCap)
        throw BudgetExceededError("degree " + std::to_string(m) + " needs " +
                                      (exact > kHardCap ? std::string("more than 2^31")
                                                        : std::to_string(total)) +
                                      " tuples, budget is " + std::to_string(budget),
                                  total);

    const auto count = static_cast<std::int64_t>(total);
    std::vector<std::int64_t> place(m);  // place value of each digit position
    place[m - 1] = 1;
    for (int j = m - 2; j >= 0; --j) place[j] = place[j + 1] * n;

    UnionFind uf(count);
    const std::vector<int>& r = qs.r_codes();
    for (int pos = 0; pos + 1 < m; ++pos) {
        const std::int64_t hi = place[pos];
        const std::int64_t lo = place[pos + 1];
        for (std::int64_t code = 0; code < count; ++code) {
            const int x = static_cast<int>(code / hi % n);
            const int y = static_cast<int>(code / lo % n);
            const int image = r[x * n + y];
            const std::int64_t moved =
                code + (image / n - x) * hi + (image % n - y) * lo;
            uf.unite(static_cast<int>(code), static_cast<int>(moved));
        }
    }

    OrbitPartition part;
    part.n = n;
    part.m = m;
    part.orbit_id.assign(count, -1);
    std::vector<int> root_to_id(count, -1);
    for (std::int64_t code = 0; code < count; ++code) {
        int root = uf.find(static_cast<int>(code));
        if (root_to_id[root] < 0) {
            root_to_id[root] = static_cast<int>(part.orbit_sizes.size());
            part.orbit_sizes.push_back(0);
        }
        part.orbit_id[code] = root_to_id[root];
        ++part.orbit_sizes[root_to_id[root]];
    }
    part.orbit_count = static_cast<std::int64_t>(part.orbit_sizes.size());
    return part;
}

std::int64_t dim_A(const QuadraticSet& qs, int m, std::uint64_t budget) {
    if (m == 0) return 1;
    return orbit_partition(qs, m, budget).orbit_count;
}

namespace {

// Smallest d such that the (d+1)-th backward difference of `cumulative`
// vanishes at every index of the trailing window. Differences that would
// reach below index 0 make the order unverifiable, hence inconclusive.
std::optional<int> estimate_growth_order(const std::vector<std::int64_t>& cumulative) {
    const int m_max = static_cast<int>(cumulative.size()) - 1;
    if (m_max < 1) return std::nullopt;
    const int window = (m_max + 1) / 2;
    const int lo = m_max - window + 1;
    std::vector<std::int64_t> diff = cumulative;
    for (int order = 1; order <= m_max; ++order) {
        // diff currently holds the (order-1)-th difference; take one more.
        for (int i = static_cast<int>(diff.size()) - 1; i >= order; --i)
            diff[i] -= diff[i - 1];
        if (lo < order) return std::nullopt;  // window underruns the data
        bool zero = true;
        for (int i = lo; i <= m_max && zero; ++i) zero = diff[i] == 0;
        if (zero) return order - 1;
    }
    return std::nullopt;
}

}  // namespace

GrowthTable growth_table(const QuadraticSet& qs, int m_max, std::uint64_t budget) {
    if (m_max < 2) throw BadIndexError("m_max must be >= 2");
    GrowthTable table;
    table.dims.reserve(m_max + 1);
    table.dims.push_back(1);
    table.dims.push_back(qs.size());
    for (int m = 2; m <= m_max; ++m) table.dims.push_back(dim_A(qs, m, budget));
    table.cumulative.resize(table.dims.size());
    std::int64_t run = 0;
    for (std::size_t i = 0; i < table.dims.size(); ++i) {
        run += table.dims[i];
        table.cumulative[i] = run;
    }
    table.gk_estimate = estimate_growth_order(table.cumulative);
    return table;
}

bool is_2_cancellative(const QuadraticSet& qs) {
    const int n = qs.size();
    const OrbitPartition part = orbit_partition(qs, 2);
    // Within each orbit, every first and every second coordinate may appear once.
    std::vector<int> mark_first(n, -1);
    std::vector<int> mark_second(n, -1);
    const auto groups = part.members();
    for (int g = 0; g < static_cast<int>(groups.size()); ++g) {
        for (int code : groups[g]) {
            const int x = code / n;
            const int y = code % n;
            if (mark_first[x] == g || mark_second[y] == g) return false;
            mark_first[x] = g;
            mark_second[y] = g;
        }
    }
    return true;
}

bool satisfies_maximality(const QuadraticSet& qs) {
    const std::int64_t n = qs.size();
    return dim_A(qs, 2) == n + n * (n - 1) / 2;
}

}  // namespace ybset
