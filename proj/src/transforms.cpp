#include "ybset/transforms.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "ybset/orbits.hpp"

namespace ybset {

namespace {

void require_non_degenerate(const QuadraticSet& qs, const char* what) {
    if (!is_non_degenerate(qs))
        throw RequiresNonDegenerateError(std::string(what) + " needs a non-degenerate set");
}

void require_braided(const QuadraticSet& qs, const char* what) {
    if (!is_braided(qs, BraidMethod::direct))
        throw RequiresBraidedError(std::string(what) + " needs a braided set");
}

}  // namespace

QuadraticSet derived_solution(const QuadraticSet& qs) {
    require_non_degenerate(qs, "derived_solution");
    require_braided(qs, "derived_solution");
    const int n = qs.size();
    std::vector<Permutation> sigmas;
    sigmas.reserve(n);
    for (int x = 0; x < n; ++x) {
        std::vector<int> im(n);
        for (int y = 0; y < n; ++y) {
            const int a = qs.gamma(y).inverse()(x);
            im[y] = qs.gamma(x)(qs.sigma(a)(y));
        }
        sigmas.emplace_back(std::move(im));  // non-bijective image would throw here
    }
    return make_sd(sigmas);
}

Retraction retraction(const QuadraticSet& qs) {
    require_non_degenerate(qs, "retraction");
    require_braided(qs, "retraction");
    const int n = qs.size();

    std::vector<int> cls(n, -1);
    int k = 0;
    for (int x = 0; x < n; ++x) {
        if (cls[x] >= 0) continue;
        cls[x] = k;
        for (int y = x + 1; y < n; ++y)
            if (cls[y] < 0 && qs.sigma(x) == qs.sigma(y) && qs.gamma(x) == qs.gamma(y))
                cls[y] = k;
        ++k;
    }

    // Build rbar over all representative choices and insist they agree.
    std::vector<std::pair<int, int>> table(static_cast<std::size_t>(k) * k, {-1, -1});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto [u, v] = qs.apply(x, y);
            const std::pair<int, int> image{cls[u], cls[v]};
            auto& slot = table[cls[x] * k + cls[y]];
            if (slot.first < 0)
                slot = image;
            else if (slot != image)
                throw IllDefinedError("induced map depends on representatives at class pair (" +
                                      std::to_string(cls[x]) + "," + std::to_string(cls[y]) + ")");
        }
    return Retraction{make_from_r_table(k, table), std::move(cls)};
}

std::optional<int> multipermutation_level(const QuadraticSet& qs, int max_steps) {
    if (max_steps < 0) max_steps = qs.size();
    if (qs.size() == 1) return 0;
    QuadraticSet cur = qs;
    for (int step = 1; step <= max_steps; ++step) {
        QuadraticSet next = retraction(cur).quotient;
        if (next.size() == 1) return step;
        if (next.size() == cur.size()) return std::nullopt;
        cur = std::move(next);
    }
    return std::nullopt;
}

bool PermutationGroup::contains(const Permutation& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermutationGroup::is_transitive() const {
    if (elements_.empty()) return false;
    const int n = elements_.front().size();
    std::vector<char> hit(n, 0);
    for (const auto& g : elements_) hit[g(0)] = 1;
    return std::count(hit.begin(), hit.end(), 1) == n;
}

PermutationGroup permutation_group(const QuadraticSet& qs, GeneratorFamily which) {
    std::vector<Permutation> gens;
    if (which == GeneratorFamily::sigma || which == GeneratorFamily::both) {
        if (!qs.has_sigma())
            throw RequiresNonDegenerateError("sigma family is not bijective");
        gens.insert(gens.end(), qs.sigmas().begin(), qs.sigmas().end());
    }
    if (which == GeneratorFamily::gamma || which == GeneratorFamily::both) {
        if (!qs.has_gamma())
            throw RequiresNonDegenerateError("gamma family is not bijective");
        gens.insert(gens.end(), qs.gammas().begin(), qs.gammas().end());
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::set<Permutation> closed;
    closed.insert(Permutation::identity(qs.size()));
    std::vector<Permutation> frontier(closed.begin(), closed.end());
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& h : frontier)
            for (const auto& g : gens) {
                Permutation prod = g * h;
                if (closed.insert(prod).second) next.push_back(std::move(prod));
            }
        frontier = std::move(next);
    }
    return PermutationGroup(std::move(gens), {closed.begin(), closed.end()});
}

bool is_indecomposable(const QuadraticSet& qs) {
    require_non_degenerate(qs, "is_indecomposable");
    const int n = qs.size();
    // Point orbit of 0 under forward generator images; on a finite set this
    // equals the orbit under the generated group.
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int p = stack.back();
        stack.pop_back();
        for (int x = 0; x < n; ++x)
            for (int q : {qs.sigma(x)(p), qs.gamma(x)(p)})
                if (!seen[q]) {
                    seen[q] = 1;
                    ++reached;
                    stack.push_back(q);
                }
    }
    return reached == n;
}

QuadraticSet relabel(const QuadraticSet& qs, const Permutation& f) {
    const int n = qs.size();
    const Permutation finv = f.inverse();
    std::vector<std::pair<int, int>> table(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto [u, v] = qs.apply(finv(x), finv(y));
            table[x * n + y] = {f(u), f(v)};
        }
    return make_from_r_table(n, table);
}

namespace {

// Cheap per-element invariant used to prune isomorphism candidates.
struct ElementKey {
    std::vector<int> sigma_cycles;
    std::vector<int> gamma_cycles;
    auto operator<=>(const ElementKey&) const = default;
};

std::vector<ElementKey> element_keys(const QuadraticSet& qs) {
    std::vector<ElementKey> keys(qs.size());
    for (int x = 0; x < qs.size(); ++x) {
        if (qs.has_sigma()) keys[x].sigma_cycles = qs.sigma(x).cycle_type();
        if (qs.has_gamma()) keys[x].gamma_cycles = qs.gamma(x).cycle_type();
    }
    return keys;
}

struct IsoSearch {
    const QuadraticSet& a;
    const QuadraticSet& b;
    std::vector<ElementKey> keys_a;
    std::vector<ElementKey> keys_b;
    std::vector<int> f;     // a -> b, -1 unassigned
    std::vector<char> used;  // b side

    bool propagate(std::vector<int>& trail, int x, int w) {
        std::vector<int> work{x};
        f[x] = w;
        used[w] = 1;
        trail.push_back(x);
        while (!work.empty()) {
            const int p = work.back();
            work.pop_back();
            for (int q = 0; q < a.size(); ++q) {
                if (f[q] < 0) continue;
                for (auto [s, t] : {std::pair{p, q}, std::pair{q, p}}) {
                    auto [u, v] = a.apply(s, t);
                    auto [bu, bv] = b.apply(f[s], f[t]);
                    for (auto [from, to] : {std::pair{u, bu}, std::pair{v, bv}}) {
                        if (f[from] >= 0) {
                            if (f[from] != to) return false;
                        } else {
                            if (used[to] || keys_a[from] != keys_b[to]) return false;
                            f[from] = to;
                            used[to] = 1;
                            trail.push_back(from);
                            work.push_back(from);
                        }
                    }
                }
            }
        }
        return true;
    }

    void unwind(std::vector<int>& trail, std::size_t mark) {
        while (trail.size() > mark) {
            const int x = trail.back();
            trail.pop_back();
            used[f[x]] = 0;
            f[x] = -1;
        }
    }

    bool solve() {
        int x = 0;
        while (x < a.size() && f[x] >= 0) ++x;
        if (x == a.size()) return true;
        for (int w = 0; w < a.size(); ++w) {
            if (used[w] || keys_a[x] != keys_b[w]) continue;
            std::vector<int> trail;
            if (propagate(trail, x, w) && solve()) return true;
            unwind(trail, 0);
        }
        return false;
    }
};

}  // namespace

std::optional<Permutation> are_isomorphic(const QuadraticSet& a, const QuadraticSet& b) {
    if (a.size() != b.size()) return std::nullopt;
    if (a.has_sigma() != b.has_sigma() || a.has_gamma() != b.has_gamma()) return std::nullopt;
    if (orbit_partition(a, 2).sizes_sorted() != orbit_partition(b, 2).sizes_sorted())
        return std::nullopt;

    IsoSearch search{a, b, element_keys(a), element_keys(b),
                     std::vector<int>(a.size(), -1), std::vector<char>(a.size(), 0)};
    {
        auto ka = search.keys_a;
        auto kb = search.keys_b;
        std::sort(ka.begin(), ka.end());
        std::sort(kb.begin(), kb.end());
        if (ka != kb) return std::nullopt;
    }
    if (!search.solve()) return std::nullopt;
    return Permutation(search.f);
}

std::vector<int> canonical_form(const QuadraticSet& qs, int limit) {
    const int n = qs.size();
    if (n > limit)
        throw LimitExceededError("canonicalization limit is " + std::to_string(limit) +
                                 ", set has " + std::to_string(n) + " elements");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> inv(n);
    std::vector<int> best;
    std::vector<int> cur(static_cast<std::size_t>(2) * n * n);
    do {
        for (int i = 0; i < n; ++i) inv[perm[i]] = i;
        bool worse = false;
        bool better = best.empty();
        for (int x = 0; x < n && !worse; ++x)
            for (int y = 0; y < n; ++y) {
                auto [u, v] = qs.apply(inv[x], inv[y]);
                const int idx = 2 * (x * n + y);
                cur[idx] = perm[u];
                cur[idx + 1] = perm[v];
                if (!better) {
                    for (int j = idx; j <= idx + 1; ++j) {
                        if (cur[j] < best[j]) {
                            better = true;
                            break;
                        }
                        if (cur[j] > best[j]) {
                            worse = true;
                            break;
                        }
                    }
                    if (worse) break;
                }
            }
        if (!worse && better) best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

QuadraticSet from_flat_table(int n, const std::vector<int>& flat) {
    if (flat.size() != static_cast<std::size_t>(2) * n * n)
        throw BadIndexError("flat table has wrong length");
    std::vector<std::pair<int, int>> table(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n * n; ++i) table[i] = {flat[2 * i], flat[2 * i + 1]};
    return make_from_r_table(n, table);
}

}  // namespace ybset
