#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ybset/permutation.hpp"

namespace ybset {

/// A finite quadratic set: X = {0..n-1} together with a bijection r of X x X,
/// written r(x,y) = (sigma_x(y), gamma_y(x)).
///
/// Pairs are encoded as flat codes x*n + y. The sigma/gamma permutation caches
/// are built eagerly at construction and left empty when the respective family
/// is not bijective, so degenerate sets stay representable and queryable.
/// Instances are immutable; all operations on them are pure functions.
class QuadraticSet {
public:
    QuadraticSet() = default;

    int size() const { return n_; }

    /// r(x, y).
    std::pair<int, int> apply(int x, int y) const {
        int c = r_code_[x * n_ + y];
        return {c / n_, c % n_};
    }

    /// r on flat pair codes.
    int apply_code(int code) const { return r_code_[code]; }
    const std::vector<int>& r_codes() const { return r_code_; }

    /// First coordinate of r(x, y); defined for every quadratic set.
    int sigma_image(int x, int y) const { return r_code_[x * n_ + y] / n_; }
    /// Second coordinate of r(x, y); defined for every quadratic set.
    int gamma_image(int y, int x) const { return r_code_[x * n_ + y] % n_; }

    bool has_sigma() const { return !sigma_.empty(); }
    bool has_gamma() const { return !gamma_.empty(); }

    /// Throws RequiresNonDegenerateError when the family is not bijective.
    const Permutation& sigma(int x) const;
    const Permutation& gamma(int y) const;
    const std::vector<Permutation>& sigmas() const;
    const std::vector<Permutation>& gammas() const;

    /// Row-major table: entry x*n + y holds r(x, y).
    std::vector<std::pair<int, int>> r_table() const;

    bool operator==(const QuadraticSet& other) const {
        return n_ == other.n_ && r_code_ == other.r_code_;
    }

    friend QuadraticSet make_from_r_table(int n, const std::vector<std::pair<int, int>>& pairs);

private:
    void build_caches();

    int n_ = 0;
    std::vector<int> r_code_;
    std::vector<Permutation> sigma_;
    std::vector<Permutation> gamma_;
};

/// Builds a quadratic set from the full value table of r, row-major by (x, y).
/// Throws BadIndexError for out-of-range coordinates and NotBijectiveError when
/// the table is not a bijection of X x X.
QuadraticSet make_from_r_table(int n, const std::vector<std::pair<int, int>>& pairs);

/// r(x,y) = (sigma_x(y), x). The result is automatically non-degenerate.
QuadraticSet make_sd(const std::vector<Permutation>& sigmas);

/// r(x,y) = (sigma_x(y), gamma_y(x)); validates that the assembled r is a
/// bijection of X x X.
QuadraticSet make_from_sigma_gamma(const std::vector<Permutation>& sigmas,
                                   const std::vector<Permutation>& gammas);

bool is_non_degenerate(const QuadraticSet& qs);
bool is_involutive(const QuadraticSet& qs);
bool is_square_free(const QuadraticSet& qs);
bool is_sd(const QuadraticSet& qs);

enum class BraidMethod {
    /// Check r1 r2 r1 == r2 r1 r2 on all n^3 triples.
    direct,
    /// Check the three pointwise sigma/gamma conditions equivalent to the
    /// braid relation. Uses only forward images, never inverses, so it is
    /// evaluable on degenerate sets as well.
    yb_conditions,
};

bool is_braided(const QuadraticSet& qs, BraidMethod method = BraidMethod::direct);

/// Upper bound on k accepted by the r-power operations: every r-orbit in X^2
/// has at most n^2 elements, so powers beyond 2n^2 never reach new pairs.
inline long long max_r_power(const QuadraticSet& qs) {
    return 2LL * qs.size() * qs.size();
}

/// r applied k times to (x, y). k must lie in [0, 2n^2].
std::pair<int, int> apply_r_power(const QuadraticSet& qs, std::pair<int, int> pair, long long k);

/// Closed-form value of r^k(x, y) for SD sets:
///   r^{2k}   = ((s_x s_y)^k s_x^{-k}(x),      (s_x s_y)^{k-1} s_x s_y^{-(k-1)}(y))
///   r^{2k+1} = ((s_x s_y)^k s_x s_y^{-k}(y),  (s_x s_y)^k s_x^{-k}(x))
/// with the simpler square-free specialization
///   r^{2k}   = ((s_x s_y)^k(x),               (s_x s_y)^{k-1} s_x(y))
///   r^{2k+1} = ((s_x s_y)^k s_x(y),           (s_x s_y)^k(x)).
/// Agrees with apply_r_power on every SD braided set. Throws NotSdError when
/// some gamma_y is not the identity.
std::pair<int, int> closed_form_r_power(const QuadraticSet& qs, std::pair<int, int> pair,
                                        long long k);

}  // namespace ybset
