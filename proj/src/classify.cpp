#include "ybset/classify.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "ybset/constructions.hpp"
#include "ybset/orbits.hpp"
#include "ybset/transforms.hpp"

namespace ybset {

namespace {

// Candidate sigma_x lists in lexicographic one-line order.
std::vector<Permutation> candidates_fixing(int n, int x) {
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (v != x) rest.push_back(v);
    std::vector<Permutation> out;
    do {
        std::vector<int> im(n);
        im[x] = x;
        int k = 0;
        for (int v = 0; v < n; ++v)
            if (v != x) im[v] = rest[k++];
        out.emplace_back(std::move(im));
    } while (std::next_permutation(rest.begin(), rest.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> all_candidates(int n) {
    std::vector<int> im(n);
    for (int v = 0; v < n; ++v) im[v] = v;
    std::vector<Permutation> out;
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

struct CensusSearch {
    int n;
    bool square_free;
    std::vector<std::vector<Permutation>> candidates;  // per level
    std::vector<Permutation> assigned;
    std::vector<std::optional<Permutation>> forced;
    std::set<std::vector<int>> found;  // canonical forms

    explicit CensusSearch(int n, bool square_free) : n(n), square_free(square_free) {
        candidates.reserve(n);
        if (square_free) {
            for (int x = 0; x < n; ++x) candidates.push_back(candidates_fixing(n, x));
        } else {
            candidates.assign(n, all_candidates(n));
        }
        forced.resize(n);
    }

    // Conjugation law on every pair that the new assignment makes decidable;
    // images landing at unassigned indices are recorded in `forced`.
    bool consistent_after(int k, std::vector<int>& trail) {
        const int level = k + 1;
        for (int x = 0; x < level; ++x)
            for (int y = 0; y < level; ++y) {
                if (x != k && y != k) continue;
                const Permutation conj = assigned[x] * assigned[y] * assigned[x].inverse();
                const int z = assigned[x](y);
                if (square_free && conj(z) != z) return false;
                if (z < level) {
                    if (conj != assigned[z]) return false;
                } else if (forced[z]) {
                    if (conj != *forced[z]) return false;
                } else {
                    forced[z] = conj;
                    trail.push_back(z);
                }
            }
        return true;
    }

    void run(int level) {
        if (level == n) {
            QuadraticSet qs = make_sd(assigned);
            if (!is_braided(qs, BraidMethod::direct)) return;  // belt over the pruning
            found.insert(canonical_form(qs, n));
            return;
        }
        for (const Permutation& cand : candidates[level]) {
            if (forced[level] && cand != *forced[level]) continue;
            assigned.push_back(cand);
            std::vector<int> trail;
            if (consistent_after(level, trail)) run(level + 1);
            for (int z : trail) forced[z].reset();
            assigned.pop_back();
        }
    }
};

CatalogEntry make_entry(std::vector<int> form, int n) {
    QuadraticSet rep = from_flat_table(n, form);
    const OrbitPartition part = orbit_partition(rep, 2);
    CatalogEntry entry;
    entry.canonical_form = std::move(form);
    entry.orbit_count = part.orbit_count;
    entry.orbit_sizes = part.sizes_sorted();
    entry.two_cancellative = is_2_cancellative(rep);
    entry.representative = std::move(rep);
    return entry;
}

SolutionCatalog run_census(int n, Family family, int limit) {
    if (n < 1) throw BadIndexError("census needs n >= 1");
    if (n > limit)
        throw LimitExceededError(std::string(family_name(family)) + " census limit is " +
                                 std::to_string(limit) + ", asked for n = " + std::to_string(n));
    CensusSearch search(n, family == Family::quandle);
    search.run(0);
    SolutionCatalog catalog;
    catalog.n = n;
    catalog.family = family;
    for (const std::vector<int>& form : search.found) catalog.entries.push_back(make_entry(form, n));
    return catalog;  // std::set iteration already sorts by canonical form
}

}  // namespace

SolutionCatalog enumerate_quandles(int n, int limit) {
    return run_census(n, Family::quandle, limit);
}

SolutionCatalog enumerate_racks(int n, int limit) { return run_census(n, Family::rack, limit); }

std::int64_t family_lower_bound(Family family, int n) {
    return family == Family::quandle ? 2 * n - 1 : (n + 1) / 2;
}

ClassReport verify_bounds(const SolutionCatalog& catalog) {
    ClassReport report;
    const std::int64_t bound = family_lower_bound(catalog.family, catalog.n);
    std::int64_t min_seen = -1;
    for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
        const CatalogEntry& entry = catalog.entries[i];
        if (min_seen < 0 || entry.orbit_count < min_seen) min_seen = entry.orbit_count;
        if (entry.orbit_count < bound) {
            report.pass = false;
            report.lines.push_back("entry " + std::to_string(i) + " violates bound: " +
                                   std::to_string(entry.orbit_count) + " < " +
                                   std::to_string(bound));
        }
        if (catalog.family == Family::rack && entry.orbit_count == bound) {
            const auto& sigmas = entry.representative.sigmas();
            const bool constant =
                std::all_of(sigmas.begin(), sigmas.end(),
                            [&](const Permutation& s) { return s == sigmas.front(); });
            const bool full_cycle =
                sigmas.front().cycle_type() == std::vector<int>{catalog.n};
            if (!constant || !full_cycle) {
                report.pass = false;
                report.lines.push_back("entry " + std::to_string(i) +
                                       " attains the bound without a constant full-cycle sigma");
            } else {
                report.lines.push_back("entry " + std::to_string(i) +
                                       " attains the bound with a constant full-cycle sigma");
            }
        }
    }
    report.lines.push_back("entries: " + std::to_string(catalog.entries.size()));
    report.lines.push_back("bound: " + std::to_string(bound));
    if (min_seen >= 0) report.lines.push_back("min_orbit_count: " + std::to_string(min_seen));
    return report;
}

ClassReport verify_minimality_classification(int n, int limit) {
    if (n < 2 || n > 6) throw BadIndexError("minimality classification is checked for 2 <= n <= 6");
    ClassReport report;
    const SolutionCatalog catalog = enumerate_quandles(n, limit);

    std::vector<std::pair<std::string, std::vector<int>>> expected;
    if (n == 2) expected.emplace_back("trivial(2)", canonical_form(trivial(2)));
    if (n == 3) {
        expected.emplace_back("dihedral(3)", canonical_form(dihedral_quandle(3)));
        expected.emplace_back("three_element", canonical_form(three_element()));
    }
    if (n == 5) expected.emplace_back("dihedral(5)", canonical_form(dihedral_quandle(5)));

    std::vector<const CatalogEntry*> survivors;
    for (const CatalogEntry& entry : catalog.entries)
        if (entry.orbit_count == 2 * n - 1) survivors.push_back(&entry);

    report.lines.push_back("survivors: " + std::to_string(survivors.size()));
    report.lines.push_back("expected: " + std::to_string(expected.size()));
    if (survivors.size() != expected.size()) report.pass = false;

    for (const auto& [name, form] : expected) {
        const bool present =
            std::any_of(survivors.begin(), survivors.end(),
                        [&](const CatalogEntry* e) { return e->canonical_form == form; });
        report.lines.push_back(std::string(present ? "found: " : "missing: ") + name);
        if (!present) report.pass = false;
    }
    for (const CatalogEntry* survivor : survivors) {
        const bool known =
            std::any_of(expected.begin(), expected.end(),
                        [&](const auto& e) { return e.second == survivor->canonical_form; });
        if (!known) {
            report.pass = false;
            std::ostringstream os;
            os << "unexpected survivor with orbit_count " << survivor->orbit_count;
            report.lines.push_back(os.str());
        }
    }
    return report;
}

std::string catalog_lines(const SolutionCatalog& catalog) {
    std::ostringstream os;
    for (const CatalogEntry& entry : catalog.entries) {
        os << "n=" << catalog.n << " family=" << family_name(catalog.family)
           << " canonical_form=";
        for (std::size_t i = 0; i < entry.canonical_form.size(); ++i)
            os << (i ? "," : "") << entry.canonical_form[i];
        os << " orbit_count=" << entry.orbit_count
           << " two_cancellative=" << (entry.two_cancellative ? "true" : "false")
           << " orbit_sizes=";
        for (std::size_t i = 0; i < entry.orbit_sizes.size(); ++i)
            os << (i ? "," : "") << entry.orbit_sizes[i];
        os << "\n";
    }
    return os.str();
}

}  // namespace ybset
