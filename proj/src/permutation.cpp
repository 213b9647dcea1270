#include "ybset/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ybset {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    std::vector<char> seen(n, 0);
    for (int v : images_) {
        if (v < 0 || v >= n)
            throw BadPermutationError("image " + std::to_string(v) + " out of range [0," +
                                      std::to_string(n) + ")");
        if (seen[v])
            throw BadPermutationError("image " + std::to_string(v) + " repeated");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    Permutation p;
    p.images_ = std::move(im);
    return p;
}

Permutation Permutation::from_cycle(int n, std::span<const int> cycle) {
    Permutation p = identity(n);
    std::vector<char> used(n, 0);
    for (int v : cycle) {
        if (v < 0 || v >= n) throw BadPermutationError("cycle entry out of range");
        if (used[v]) throw BadPermutationError("cycle entry repeated");
        used[v] = 1;
    }
    if (cycle.size() < 2) return p;
    for (std::size_t i = 0; i < cycle.size(); ++i)
        p.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < size(); ++i) im[images_[i]] = i;
    Permutation p;
    p.images_ = std::move(im);
    return p;
}

Permutation Permutation::pow(long long k) const {
    Permutation base = k >= 0 ? *this : inverse();
    unsigned long long e = k >= 0 ? static_cast<unsigned long long>(k)
                                  : static_cast<unsigned long long>(-(k + 1)) + 1;
    Permutation acc = identity(size());
    while (e > 0) {
        if (e & 1) acc = base * acc;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<char> seen(images_.size(), 0);
    std::vector<int> lens;
    for (int i = 0; i < size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = images_[j]) {
            seen[j] = 1;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    std::vector<int> im(b.images_.size());
    for (int i = 0; i < b.size(); ++i) im[i] = a.images_[b.images_[i]];
    Permutation p;
    p.images_ = std::move(im);
    return p;
}

}  // namespace ybset
