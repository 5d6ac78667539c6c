#pragma once

#include "regseq/matrix.hpp"
#include "regseq/representation.hpp"

#include <random>
#include <utility>
#include <vector>

namespace regseq::testing {

// Random representation with w = e_j and A_0 e_j = e_j. Pinning that column
// keeps v(0) consistent under the digit recurrence (v(0) = A_0 v(0)), which
// every running-sum construction relies on.
inline LinearRep random_rep(std::mt19937_64& rng, int q, int max_dim, int lo = -2, int hi = 2) {
  std::uniform_int_distribution<int> dim_dist(1, max_dim);
  const int d = dim_dist(rng);
  std::uniform_int_distribution<int> entry(lo, hi);
  std::uniform_int_distribution<int> coord(0, d - 1);
  const int pin = coord(rng);

  LinearRep rep;
  rep.q = q;
  rep.dim = d;
  rep.u.resize(d);
  for (auto& x : rep.u) x = entry(rng);
  for (int r = 0; r < q; ++r) {
    RatMatrix m(d, d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) m.at(i, j) = entry(rng);
    }
    rep.matrices.push_back(std::move(m));
  }
  for (int i = 0; i < d; ++i) rep.matrices[0].at(i, pin) = (i == pin) ? 1 : 0;
  rep.w.assign(d, Rational(0));
  rep.w[pin] = 1;
  return rep;
}

// Binary digit-sum: v(n) = (s(n), 1).
inline LinearRep s2_rep() {
  LinearRep rep;
  rep.q = 2;
  rep.dim = 2;
  rep.u = {Rational(1), Rational(0)};
  RatMatrix a0 = RatMatrix::identity(2);
  RatMatrix a1 = RatMatrix::identity(2);
  a1.at(0, 1) = 1;
  rep.matrices = {a0, a1};
  rep.w = {Rational(0), Rational(1)};
  return rep;
}

// (-1)^{digit sum}: one-dimensional sign flip per one-bit.
inline LinearRep tm_rep() {
  LinearRep rep;
  rep.q = 2;
  rep.dim = 1;
  rep.u = {Rational(1)};
  RatMatrix a0(1, 1), a1(1, 1);
  a0.at(0, 0) = 1;
  a1.at(0, 0) = -1;
  rep.matrices = {a0, a1};
  rep.w = {Rational(1)};
  return rep;
}

// Scalar pair {(0), (2)}: x(n) = [n = 2^j - ... ] style doubling sequence.
inline LinearRep zero2_rep() {
  LinearRep rep;
  rep.q = 2;
  rep.dim = 1;
  rep.u = {Rational(1)};
  RatMatrix a0(1, 1), a1(1, 1);
  a0.at(0, 0) = 0;
  a1.at(0, 0) = 2;
  rep.matrices = {a0, a1};
  rep.w = {Rational(1)};
  return rep;
}

// Shared nonzero nilpotent pair: C = A_0 + A_1 is nilpotent but not zero.
inline LinearRep nilpotent2_rep() {
  LinearRep rep;
  rep.q = 2;
  rep.dim = 2;
  rep.u = {Rational(1), Rational(0)};
  RatMatrix a(2, 2);
  a.at(0, 1) = 1;
  rep.matrices = {a, a};
  rep.w = {Rational(0), Rational(1)};
  return rep;
}

inline RatMatrix jordan_matrix(const std::vector<std::pair<Rational, int>>& blocks) {
  int n = 0;
  for (const auto& [lam, size] : blocks) n += size;
  RatMatrix j(n, n);
  int pos = 0;
  for (const auto& [lam, size] : blocks) {
    for (int i = 0; i < size; ++i) {
      j.at(pos + i, pos + i) = lam;
      if (i + 1 < size) j.at(pos + i, pos + i + 1) = 1;
    }
    pos += size;
  }
  return j;
}

inline RatMatrix random_invertible(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<int> entry(-3, 3);
  while (true) {
    RatMatrix p(d, d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) p.at(i, j) = entry(rng);
    }
    if (rank(p) == d) return p;
  }
}

}  // namespace regseq::testing
