#include "regseq/summation.hpp"

#include <random>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"

using namespace regseq;

TEST_CASE("digit-prefix sums and total for the binary sum-of-digits sequence") {
  auto rep = testing::s2_rep();
  auto sm = summation_matrices(rep);
  CHECK(sm.b[0].is_zero());
  CHECK(sm.b[1] == RatMatrix::identity(2));
  RatMatrix c(2, 2);
  c.at(0, 0) = 2;
  c.at(0, 1) = 1;
  c.at(1, 1) = 2;
  CHECK(sm.c == c);
}

TEST_CASE("summatory representation reproduces running sums") {
  auto rep = testing::s2_rep();
  auto sum = summatory_rep(rep);
  CHECK(sum.dim == 4);
  // S(4) = s2(0)+s2(1)+s2(2)+s2(3) = 0+1+1+2
  CHECK(evaluate(sum, 4) == 4);

  // block layout of the r=1 matrix: [[C, B_1], [0, A_1]]
  RatMatrix expect(4, 4);
  expect.at(0, 0) = 2;
  expect.at(0, 1) = 1;
  expect.at(0, 2) = 1;
  expect.at(1, 1) = 2;
  expect.at(1, 3) = 1;
  expect.at(2, 2) = 1;
  expect.at(2, 3) = 1;
  expect.at(3, 3) = 1;
  CHECK(sum.matrices[1] == expect);
}

TEST_CASE("iterated summation: compact representation and frozen values") {
  auto rep = testing::s2_rep();
  auto it2 = iterated_summatory_rep(rep, 2);
  CHECK(it2.rep.dim == 6);
  CHECK(it2.base_dim == 2);
  // S2(4) = S(0)+S(1)+S(2)+S(3) = 0+0+1+2
  CHECK(evaluate(it2.rep, 4) == 3);

  // diagonal blocks at order 2 are 2C, C, A_r
  auto sm = summation_matrices(rep);
  for (int r = 0; r < 2; ++r) {
    const auto& m = it2.rep.matrices[r];
    CHECK(m.block(0, 0, 2, 2) == sm.c.scaled(2));
    CHECK(m.block(2, 2, 2, 2) == sm.c);
    CHECK(m.block(4, 4, 2, 2) == rep.matrices[r]);
    CHECK(m.block(2, 0, 2, 2).is_zero());
    CHECK(m.block(4, 0, 2, 4).is_zero());
  }
}

TEST_CASE("direct repeated summation agrees with frozen small values") {
  auto rep = testing::s2_rep();
  CHECK(direct_ksum(rep, 0, 5) == 2);   // s2(5)
  CHECK(direct_ksum(rep, 1, 4) == 4);   // S(4)
  CHECK(direct_ksum(rep, 2, 4) == 3);   // S2(4)
}

TEST_CASE("nested, compact, and direct iterated sums coincide on random inputs") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 30; ++trial) {
    int q = (trial % 2 == 0) ? 2 : 3;
    auto rep = testing::random_rep(rng, q, 3);
    for (int k = 1; k <= 3; ++k) {
      auto compact = iterated_summatory_rep(rep, k);
      LinearRep nested = rep;
      for (int i = 0; i < k; ++i) nested = summatory_rep(nested);
      for (long long n : {0LL, 1LL, 2LL, 7LL, 25LL, 119LL}) {
        auto want = direct_ksum(rep, k, n);
        CHECK(evaluate(compact.rep, n) == want);
        CHECK(evaluate(nested, n) == want);
      }
    }
  }
}

TEST_CASE("first-order summation matches prefix sums of the base sequence") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    auto rep = testing::random_rep(rng, 2, 4);
    auto sum = summatory_rep(rep);
    auto values = evaluate_prefix(rep, 200);
    Rational acc = 0;
    for (long long n = 0; n < 200; ++n) {
      CHECK(evaluate(sum, n) == acc);
      acc += values[(size_t)n];
    }
  }
}
