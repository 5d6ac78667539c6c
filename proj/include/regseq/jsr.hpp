#pragma once

#include "regseq/eigen.hpp"
#include "regseq/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace regseq {

// Strongly connected components of the union support digraph of a family,
// in topological order (so the permuted family is block upper triangular).
struct SccStructure {
  std::vector<int> perm;                   // new position -> original coordinate
  std::vector<std::pair<int, int>> blocks; // [begin, end) spans in permuted order
  bool all_singletons = false;
};

SccStructure scc_block_structure(const std::vector<RatMatrix>& family);

// Joint spectral radius bounds. Per SCC block:
//   1x1 blocks contribute max_r |entry| exactly;
//   blocks where all members coincide contribute that matrix's spectral radius;
//   otherwise lower = max over products of length <= L of rho(P)^(1/len) and
//   upper = max over products of length exactly L of ||P||_inf^(1/L).
// The family value is the max over blocks; `exact` is set when every block is
// exact or its bounds collapse within 1e-12 relative.
struct JsrResult {
  double lower = 0.0;
  double upper = 0.0;
  bool exact = false;
  std::optional<Rational> exact_value;  // set when the max is a known rational
  std::string witness;
};

JsrResult joint_spectral_radius(const std::vector<RatMatrix>& family, int product_length = 8);

// Sufficient condition for ||A_{d_0}...A_{d_{l-1}}|| = O(rho^l): the family is
// simultaneously triangularizable by the SCC permutation and the largest
// diagonal modulus is attained at exactly one coordinate.
struct GrowthAssessment {
  bool holds = false;
  std::string reason;
};

GrowthAssessment simple_growth_check(const std::vector<RatMatrix>& family);

}  // namespace regseq
