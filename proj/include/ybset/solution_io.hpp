#pragma once

#include <string>

#include "ybset/quadratic_set.hpp"

namespace ybset {

/// Solution documents are JSON objects with an integer `n` and exactly one
/// representation key:
///   "r"           n^2 pairs [u,v], row-major by (x,y)
///   "sigma_gamma" [sigmas, gammas], each a list of n image arrays
///   "sd_sigma"    a list of n image arrays (gamma implied to be the identity)
/// All indices are 0-based and must lie in [0, n).
///
/// parse_solution throws ParseError for malformed JSON, SchemaError for a
/// structurally wrong document, and passes construction errors through with
/// `source` prepended.
QuadraticSet parse_solution(const std::string& text, const std::string& source = "<input>");

/// Reads and parses a file; the path becomes the error source location.
QuadraticSet load_solution_file(const std::string& path);

/// Serializes with the tightest applicable representation: sd_sigma for SD
/// sets, sigma_gamma for non-degenerate ones, the raw r table otherwise.
/// parse_solution(serialize_solution(qs)) reproduces qs exactly.
std::string serialize_solution(const QuadraticSet& qs);

}  // namespace ybset
