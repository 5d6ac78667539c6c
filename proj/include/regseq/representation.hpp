#pragma once

#include "regseq/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace regseq {

// Sequence model: x(n) = u * A_{d_0} * ... * A_{d_{l-1}} * w where
// d_0..d_{l-1} are the base-q digits of n, least significant first, and
// n = 0 has the empty digit string (so x(0) = u * w).
struct LinearRep {
  int q = 2;
  int dim = 0;
  RatVector u;
  std::vector<RatMatrix> matrices;  // indexed by digit, size q
  RatVector w;
};

// Base-q digits of n, least significant first; digits(0, q) is empty.
std::vector<int> digits(std::uint64_t n, int q);

// nullopt when well formed, otherwise a description of the first defect.
std::optional<std::string> validate(const LinearRep& rep);

// Throws std::invalid_argument with the validate() message.
void require_valid(const LinearRep& rep);

// v(n) = A_{d_0} * ... * A_{d_{l-1}} * w; satisfies v(q*n + r) = A_r * v(n).
RatVector evaluate_vector(const LinearRep& rep, std::uint64_t n);

Rational evaluate(const LinearRep& rep, std::uint64_t n);

// x(0), ..., x(N-1) computed by sharing digit prefixes.
std::vector<Rational> evaluate_prefix(const LinearRep& rep, std::size_t N);

// Same sharing trick for the right vectors v(0..N-1); used by oracles.
std::vector<RatVector> evaluate_vector_prefix(const LinearRep& rep, std::size_t N);

}  // namespace regseq
