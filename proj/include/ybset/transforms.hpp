#pragma once

#include <optional>
#include <vector>

#include "ybset/quadratic_set.hpp"

namespace ybset {

/// Soloviev's derived solution r'(x,y) = (gamma_x(sigma_{gamma_y^{-1}(x)}(y)), x).
/// Input must be non-degenerate and braided; the result is an SD braided set
/// that shares all graded dimensions with the input.
QuadraticSet derived_solution(const QuadraticSet& qs);

struct Retraction {
    QuadraticSet quotient;
    std::vector<int> class_map;  ///< element -> class index
};

/// Quotient by x ~ y iff sigma_x == sigma_y and gamma_x == gamma_y, with the
/// induced map rbar([x],[y]) = ([sigma_x(y)], [gamma_y(x)]). Well-definedness
/// is checked over every representative choice; IllDefinedError signals a bug
/// or an input outside the construction's hypotheses. Classes are numbered in
/// order of their smallest member.
Retraction retraction(const QuadraticSet& qs);

/// Number of retractions needed to reach a singleton, or nullopt when the
/// underlying set stops shrinking above size 1. max_steps < 0 means n steps,
/// which always suffices.
std::optional<int> multipermutation_level(const QuadraticSet& qs, int max_steps = -1);

/// A finite subgroup of Sym(n), closed under composition and inverse.
class PermutationGroup {
public:
    PermutationGroup(std::vector<Permutation> generators, std::vector<Permutation> elements)
        : generators_(std::move(generators)), elements_(std::move(elements)) {}

    const std::vector<Permutation>& generators() const { return generators_; }
    /// Sorted; always contains the identity.
    const std::vector<Permutation>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    bool contains(const Permutation& p) const;
    /// Does the group act transitively on {0..n-1}?
    bool is_transitive() const;

private:
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
};

enum class GeneratorFamily { sigma, gamma, both };

/// Closure of the selected translation family under composition.
/// Throws RequiresNonDegenerateError when a requested family is not bijective.
PermutationGroup permutation_group(const QuadraticSet& qs,
                                   GeneratorFamily which = GeneratorFamily::both);

/// True when the group generated by all sigma_x and gamma_x acts transitively
/// on X. (Computed from the point orbit of 0, which equals the group orbit.)
bool is_indecomposable(const QuadraticSet& qs);

/// Relabels the set along f: r'(x,y) = (f x f)(r(f^{-1}(x), f^{-1}(y))).
QuadraticSet relabel(const QuadraticSet& qs, const Permutation& f);

/// Searches for a bijection f with (f x f) o r_a == r_b o (f x f). Candidates
/// are pruned by sigma/gamma cycle-type matching and returned in lexicographic
/// order, so the witness is deterministic. nullopt when not isomorphic.
std::optional<Permutation> are_isomorphic(const QuadraticSet& a, const QuadraticSet& b);

inline constexpr int kDefaultCanonicalLimit = 8;

/// Lexicographically minimal flattened r-table over all n! relabelings;
/// equal canonical forms characterize isomorphism. The flattening lists
/// r(x,y) = (u,v) as ...,u,v,... row-major by (x,y), 2n^2 entries total.
/// Throws LimitExceededError when n > limit.
std::vector<int> canonical_form(const QuadraticSet& qs, int limit = kDefaultCanonicalLimit);

/// Rebuilds a set from a flattened table as produced by canonical_form.
QuadraticSet from_flat_table(int n, const std::vector<int>& flat);

}  // namespace ybset
