#pragma once

#include <compare>
#include <span>
#include <vector>

#include "ybset/errors.hpp"

namespace ybset {

/// A bijection of {0..n-1}, stored in one-line notation: position i holds the
/// image of i.
class Permutation {
public:
    Permutation() = default;

    /// Validates that `images` is a bijection of {0..n-1}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    /// The cycle (c0 c1 ... ck) on {0..n-1}; points outside the cycle are fixed.
    static Permutation from_cycle(int n, std::span<const int> cycle);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    Permutation inverse() const;

    /// k may be negative.
    Permutation pow(long long k) const;

    /// Cycle lengths including fixed points, sorted ascending.
    std::vector<int> cycle_type() const;

    /// (a * b)(x) = a(b(x)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

}  // namespace ybset
