#pragma once

#include <vector>

#include "ybset/quadratic_set.hpp"

namespace ybset {

// Named solution families. Everything is 0-indexed on X = {0..n-1}; sources
// that present these families on {1..n} correspond via label -> label - 1.

/// r(x,y) = (y,x).
QuadraticSet trivial(int n);

/// Z/n with sigma_i(j) = 2i - j. Square-free SD braided; trivial flip at n = 2.
QuadraticSet dihedral_quandle(int n);

/// sigma_0 = sigma_{n-1} = (0 1 ... n-1), sigma_x = (x x+1 ... n-1) otherwise.
/// Non-degenerate with a single orbit in every X^m, m >= 2; not braided for
/// n >= 3.
QuadraticSet cyclic_perm_example(int n);

/// sigma_{n-2} = id, sigma_{n-1} = (0 1 ... n-2), sigma_x = (x+1 ... n-1)
/// otherwise. Square-free with dim A_m = n + 1 for all m >= 2.
QuadraticSet squarefree_example(int n);

/// Z/n with r(a,b) = (b+1, a): every sigma_x is the +1 cycle.
QuadraticSet shift_solution(int n);

/// Z/n with r(x,y) = (y-1, x+2): non-SD braided; its derived solution is the
/// shift solution.
QuadraticSet skew_shift(int n);

/// X = {0,1,2} with sigma_0 = sigma_1 = id, sigma_2 = (0 1).
QuadraticSet three_element();

/// All SD braided sets with every sigma_x an involution that extend the
/// length-n chain (1,0) -> (2,1) -> ... -> (0,n-1) -> (1,0) in X^2.
///
/// Candidates are assembled exactly as the chain forces them: sigma is the
/// shift-by-2 permutation (one n-cycle for odd n, two interleaved n/2-cycles
/// for even n), sigma_1 must fix 1 and conjugate sigma to its inverse, which
/// leaves one candidate for odd n and n/2 candidates tau_j for even n; the
/// braid relation is then tested on each candidate rather than trusted.
/// Results are sorted by their r tables, which puts the chain extension
/// itself (the dihedral quandle) first. For odd n it is the single output.
std::vector<QuadraticSet> cycle_extension(int n);

}  // namespace ybset
