#pragma once

#include "regseq/representation.hpp"

namespace regseq {

// b[r] = sum of the digit matrices with index < r, c = sum of all of them.
// They satisfy sum_{n < qN+r} v(n) = c * sum_{n<N} v(n) + b[r] * v(N).
struct SummationMatrices {
  std::vector<RatMatrix> b;
  RatMatrix c;
};

SummationMatrices summation_matrices(const LinearRep& rep);

// Representation of N |-> sum_{n<N} x(n) with right vectors
// (sum_{n<N} v(n), v(N)); dimension doubles.
LinearRep summatory_rep(const LinearRep& rep);

// Representation of the k-fold running sum in dimension (k+1)*D.
// Right vectors stack the j-fold partial sums, highest order first, with the
// original v(N) in the last block. Diagonal blocks of each digit matrix are
// q^{k-1}*c, ..., q*c, c, A_r.
struct IteratedSummationRep {
  LinearRep rep;
  int order = 1;      // k
  int base_dim = 0;   // D
  // coupling[m-1][j][r]: block multiplying the j-fold sum in the digit-r
  // recurrence of the (m)-fold sum, for j = 0..m-1. Depends on r.
  std::vector<std::vector<std::vector<RatMatrix>>> coupling;
};

IteratedSummationRep iterated_summatory_rep(const LinearRep& rep, int k);

// Brute-force k-fold running sum of x at N; the test oracle.
Rational direct_ksum(const LinearRep& rep, int k, std::size_t N);

}  // namespace regseq
