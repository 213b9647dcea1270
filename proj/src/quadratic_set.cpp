#include "ybset/quadratic_set.hpp"

#include <algorithm>
#include <string>

namespace ybset {

namespace {

[[noreturn]] void throw_no_sigma() {
    throw RequiresNonDegenerateError("sigma maps are not all bijective");
}

[[noreturn]] void throw_no_gamma() {
    throw RequiresNonDegenerateError("gamma maps are not all bijective");
}

}  // namespace

const Permutation& QuadraticSet::sigma(int x) const {
    if (sigma_.empty()) throw_no_sigma();
    return sigma_[x];
}

const Permutation& QuadraticSet::gamma(int y) const {
    if (gamma_.empty()) throw_no_gamma();
    return gamma_[y];
}

const std::vector<Permutation>& QuadraticSet::sigmas() const {
    if (sigma_.empty()) throw_no_sigma();
    return sigma_;
}

const std::vector<Permutation>& QuadraticSet::gammas() const {
    if (gamma_.empty()) throw_no_gamma();
    return gamma_;
}

std::vector<std::pair<int, int>> QuadraticSet::r_table() const {
    std::vector<std::pair<int, int>> table(r_code_.size());
    for (std::size_t i = 0; i < r_code_.size(); ++i)
        table[i] = {r_code_[i] / n_, r_code_[i] % n_};
    return table;
}

void QuadraticSet::build_caches() {
    sigma_.clear();
    gamma_.clear();
    bool sigma_ok = true;
    bool gamma_ok = true;
    std::vector<std::vector<int>> sig(n_, std::vector<int>(n_));
    std::vector<std::vector<int>> gam(n_, std::vector<int>(n_));
    std::vector<char> seen(n_);
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
            int c = r_code_[x * n_ + y];
            sig[x][y] = c / n_;
            gam[y][x] = c % n_;
        }
    auto bijective = [&](const std::vector<int>& im) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int v : im) {
            if (seen[v]) return false;
            seen[v] = 1;
        }
        return true;
    };
    for (int x = 0; x < n_ && sigma_ok; ++x) sigma_ok = bijective(sig[x]);
    for (int y = 0; y < n_ && gamma_ok; ++y) gamma_ok = bijective(gam[y]);
    if (sigma_ok)
        for (auto& im : sig) sigma_.emplace_back(std::move(im));
    if (gamma_ok)
        for (auto& im : gam) gamma_.emplace_back(std::move(im));
}

QuadraticSet make_from_r_table(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 1) throw BadIndexError("set size must be >= 1");
    if (pairs.size() != static_cast<std::size_t>(n) * n)
        throw NotBijectiveError("expected " + std::to_string(static_cast<std::size_t>(n) * n) +
                                " pairs, got " + std::to_string(pairs.size()));
    QuadraticSet qs;
    qs.n_ = n;
    const std::size_t table_size = static_cast<std::size_t>(n) * n;
    qs.r_code_.resize(table_size);
    std::vector<int> hit(table_size, -1);
    for (std::size_t i = 0; i < table_size; ++i) {
        auto [u, v] = pairs[i];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw BadIndexError("entry " + std::to_string(i) + ": pair (" + std::to_string(u) +
                                "," + std::to_string(v) + ") out of range");
        int code = u * n + v;
        if (hit[code] >= 0)
            throw NotBijectiveError("entries " + std::to_string(hit[code]) + " and " +
                                    std::to_string(i) + " both map to (" + std::to_string(u) +
                                    "," + std::to_string(v) + ")");
        hit[code] = static_cast<int>(i);
        qs.r_code_[i] = code;
    }
    qs.build_caches();
    return qs;
}

QuadraticSet make_sd(const std::vector<Permutation>& sigmas) {
    const int n = static_cast<int>(sigmas.size());
    if (n < 1) throw BadIndexError("set size must be >= 1");
    for (const auto& s : sigmas)
        if (s.size() != n) throw BadPermutationError("sigma of wrong size");
    std::vector<std::pair<int, int>> table(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) table[x * n + y] = {sigmas[x](y), x};
    return make_from_r_table(n, table);
}

QuadraticSet make_from_sigma_gamma(const std::vector<Permutation>& sigmas,
                                   const std::vector<Permutation>& gammas) {
    const int n = static_cast<int>(sigmas.size());
    if (n < 1) throw BadIndexError("set size must be >= 1");
    if (gammas.size() != sigmas.size())
        throw BadPermutationError("sigma and gamma families differ in length");
    for (const auto& p : sigmas)
        if (p.size() != n) throw BadPermutationError("sigma of wrong size");
    for (const auto& p : gammas)
        if (p.size() != n) throw BadPermutationError("gamma of wrong size");
    std::vector<std::pair<int, int>> table(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) table[x * n + y] = {sigmas[x](y), gammas[y](x)};
    return make_from_r_table(n, table);
}

bool is_non_degenerate(const QuadraticSet& qs) { return qs.has_sigma() && qs.has_gamma(); }

bool is_involutive(const QuadraticSet& qs) {
    const int nn = qs.size() * qs.size();
    for (int c = 0; c < nn; ++c)
        if (qs.apply_code(qs.apply_code(c)) != c) return false;
    return true;
}

bool is_square_free(const QuadraticSet& qs) {
    for (int x = 0; x < qs.size(); ++x)
        if (qs.apply_code(x * qs.size() + x) != x * qs.size() + x) return false;
    return true;
}

bool is_sd(const QuadraticSet& qs) {
    for (int x = 0; x < qs.size(); ++x)
        for (int y = 0; y < qs.size(); ++y)
            if (qs.gamma_image(y, x) != x) return false;
    return true;
}

namespace {

bool braided_direct(const QuadraticSet& qs) {
    const int n = qs.size();
    // r1 = r x id, r2 = id x r acting on triples.
    auto r1 = [&](int a, int b, int c, int& u, int& v, int& w) {
        auto [p, q] = qs.apply(a, b);
        u = p;
        v = q;
        w = c;
    };
    auto r2 = [&](int a, int b, int c, int& u, int& v, int& w) {
        auto [p, q] = qs.apply(b, c);
        u = a;
        v = p;
        w = q;
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int u, v, w;
                r1(a, b, c, u, v, w);
                r2(u, v, w, u, v, w);
                r1(u, v, w, u, v, w);
                int p, q, s;
                r2(a, b, c, p, q, s);
                r1(p, q, s, p, q, s);
                r2(p, q, s, p, q, s);
                if (u != p || v != q || w != s) return false;
            }
    return true;
}

bool braided_conditions(const QuadraticSet& qs) {
    const int n = qs.size();
    auto sig = [&](int x, int y) { return qs.sigma_image(x, y); };
    auto gam = [&](int y, int x) { return qs.gamma_image(y, x); };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (sig(x, sig(y, z)) != sig(sig(x, y), sig(gam(y, x), z))) return false;
                if (gam(x, gam(y, z)) != gam(gam(x, y), gam(sig(y, x), z))) return false;
                if (gam(sig(gam(x, y), z), sig(y, x)) != sig(gam(sig(x, z), y), gam(z, x)))
                    return false;
            }
    return true;
}

}  // namespace

bool is_braided(const QuadraticSet& qs, BraidMethod method) {
    return method == BraidMethod::direct ? braided_direct(qs) : braided_conditions(qs);
}

namespace {

void check_power_args(const QuadraticSet& qs, std::pair<int, int> pair, long long k) {
    const int n = qs.size();
    if (pair.first < 0 || pair.first >= n || pair.second < 0 || pair.second >= n)
        throw BadIndexError("pair out of range");
    if (k < 0) throw BadIndexError("power k must be >= 0");
    if (k > max_r_power(qs))
        throw LimitExceededError("power k=" + std::to_string(k) + " exceeds 2n^2=" +
                                 std::to_string(max_r_power(qs)));
}

}  // namespace

std::pair<int, int> apply_r_power(const QuadraticSet& qs, std::pair<int, int> pair, long long k) {
    check_power_args(qs, pair, k);
    int code = pair.first * qs.size() + pair.second;
    for (long long i = 0; i < k; ++i) code = qs.apply_code(code);
    return {code / qs.size(), code % qs.size()};
}

std::pair<int, int> closed_form_r_power(const QuadraticSet& qs, std::pair<int, int> pair,
                                        long long k) {
    check_power_args(qs, pair, k);
    if (!is_sd(qs)) throw NotSdError("closed-form r-power needs gamma_y = id for all y");
    const auto [x, y] = pair;
    const Permutation& sx = qs.sigma(x);
    const Permutation& sy = qs.sigma(y);
    const Permutation sxy = sx * sy;
    const long long half = k / 2;
    if (is_square_free(qs)) {
        if (k % 2 == 0) return {sxy.pow(half)(x), (sxy.pow(half - 1) * sx)(y)};
        return {(sxy.pow(half) * sx)(y), sxy.pow(half)(x)};
    }
    if (k % 2 == 0)
        return {(sxy.pow(half) * sx.pow(-half))(x), (sxy.pow(half - 1) * sx * sy.pow(1 - half))(y)};
    return {(sxy.pow(half) * sx * sy.pow(-half))(y), (sxy.pow(half) * sx.pow(-half))(x)};
}

}  // namespace ybset
