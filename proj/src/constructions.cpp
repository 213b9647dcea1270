#include "ybset/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ybset {

namespace {

void require_n(int n, int min) {
    if (n < min)
        throw BadIndexError("construction needs n >= " + std::to_string(min) + ", got " +
                            std::to_string(n));
}

Permutation range_cycle(int n, int first, int last) {
    std::vector<int> cyc;
    for (int v = first; v <= last; ++v) cyc.push_back(v);
    return Permutation::from_cycle(n, cyc);
}

int mod(int a, int n) { return (a % n + n) % n; }

}  // namespace

QuadraticSet trivial(int n) {
    require_n(n, 1);
    return make_sd(std::vector<Permutation>(n, Permutation::identity(n)));
}

QuadraticSet dihedral_quandle(int n) {
    require_n(n, 2);
    std::vector<Permutation> sigmas;
    sigmas.reserve(n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> im(n);
        for (int j = 0; j < n; ++j) im[j] = mod(2 * i - j, n);
        sigmas.emplace_back(std::move(im));
    }
    return make_sd(sigmas);
}

QuadraticSet cyclic_perm_example(int n) {
    require_n(n, 2);
    std::vector<Permutation> sigmas(n);
    const Permutation full = range_cycle(n, 0, n - 1);
    sigmas[0] = full;
    sigmas[n - 1] = full;
    for (int x = 1; x <= n - 2; ++x) sigmas[x] = range_cycle(n, x, n - 1);
    return make_sd(sigmas);
}

QuadraticSet squarefree_example(int n) {
    require_n(n, 2);
    std::vector<Permutation> sigmas(n);
    for (int x = 0; x <= n - 3; ++x) sigmas[x] = range_cycle(n, x + 1, n - 1);
    sigmas[n - 2] = Permutation::identity(n);
    sigmas[n - 1] = range_cycle(n, 0, n - 2);
    return make_sd(sigmas);
}

QuadraticSet shift_solution(int n) {
    require_n(n, 2);
    std::vector<int> im(n);
    for (int j = 0; j < n; ++j) im[j] = mod(j + 1, n);
    return make_sd(std::vector<Permutation>(n, Permutation(im)));
}

QuadraticSet skew_shift(int n) {
    require_n(n, 2);
    std::vector<int> sig_im(n);
    std::vector<int> gam_im(n);
    for (int j = 0; j < n; ++j) {
        sig_im[j] = mod(j - 1, n);
        gam_im[j] = mod(j + 2, n);
    }
    return make_from_sigma_gamma(std::vector<Permutation>(n, Permutation(sig_im)),
                                 std::vector<Permutation>(n, Permutation(gam_im)));
}

QuadraticSet three_element() {
    const Permutation id = Permutation::identity(3);
    return make_sd({id, id, Permutation({1, 0, 2})});
}

std::vector<QuadraticSet> cycle_extension(int n) {
    require_n(n, 2);
    // The chain forces sigma_1 sigma_0 to be the shift-by-2 map.
    std::vector<int> shift2(n);
    for (int l = 0; l < n; ++l) shift2[l] = mod(l + 2, n);
    const Permutation sigma(shift2);

    // sigma_1 candidates: involutions fixing 1 that conjugate sigma to its
    // inverse. Odd n pins the single map l -> 2 - l; even n leaves the image
    // of 0 free within the even class.
    std::vector<Permutation> bases;
    if (n % 2 == 1) {
        std::vector<int> im(n);
        for (int l = 0; l < n; ++l) im[l] = mod(2 - l, n);
        bases.emplace_back(std::move(im));
    } else {
        const int t = n / 2;
        for (int jj = 0; jj < t; ++jj) {
            std::vector<int> im(n);
            for (int k = 0; k < t; ++k) {
                im[mod(1 + 2 * k, n)] = mod(1 - 2 * k, n);
                im[mod(2 * k, n)] = mod(2 * jj - 2 * k, n);
            }
            bases.emplace_back(std::move(im));
        }
    }

    std::vector<QuadraticSet> out;
    for (const Permutation& base : bases) {
        std::vector<Permutation> sigmas;
        sigmas.reserve(n);
        for (int x = 0; x < n; ++x) sigmas.push_back(sigma.pow(x - 1) * base);
        QuadraticSet qs = make_sd(sigmas);
        if (is_braided(qs, BraidMethod::direct)) out.push_back(std::move(qs));
    }
    std::sort(out.begin(), out.end(),
              [](const QuadraticSet& a, const QuadraticSet& b) { return a.r_codes() < b.r_codes(); });
    return out;
}

}  // namespace ybset
