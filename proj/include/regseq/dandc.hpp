#pragma once

#include "regseq/asymptotics.hpp"
#include "regseq/representation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace regseq {

// x(n) = alpha*x(floor(n/2)) + beta*x(ceil(n/2)) + g(n) for n >= 2, with
// x(0) = 0, x(1) given, and g a polynomial n^0..n^k with coefficients c_0..c_k.
// g(0) and g(1) never enter the recurrence; they may be overridden to change
// the boundary constants d0/d1 (by default the polynomial values are used).
struct DandCProblem {
  Rational alpha;
  Rational beta;
  std::vector<Rational> toll;  // c_0..c_k
  Rational x1;
  std::optional<Rational> g0;
  std::optional<Rational> g1;

  int degree() const { return static_cast<int>(toll.size()) - 1; }
  Rational g_at0() const { return g0 ? *g0 : toll.front(); }
  Rational g_at1() const;
  Rational toll_value(std::uint64_t n) const;  // the polynomial, ignoring overrides
};

// Throws std::invalid_argument on nonpositive alpha/beta, empty toll, or a
// zero leading coefficient with degree >= 1.
void require_valid(const DandCProblem& p);

// Boundary constants of the difference sequence h(n) = x(n+1) - x(n):
// d0 = (1-beta)*x(1) - g(1) + g(0), d1 = g(1) - (1-beta)*x(1).
struct DValues {
  Rational d0;
  Rational d1;
};

DValues d_values(const DandCProblem& p);

// Linear representation of h(n) = x(n+1) - x(n) to base 2. Right vector
// (h(n), n^{k-1}, ..., n, 1, [n=0]); the last coordinate is dropped when
// d0 = d1 = 0 (and the power block is absent entirely when k = 0).
struct HRep {
  LinearRep rep;
  int degree = 0;     // k
  bool reduced = false;
  DValues d;
};

HRep build_h_rep(const DandCProblem& p);

enum class CaseTag { c1a, c1b, c2, c3, c4, const1, const2a, const2b };

std::string case_name(CaseTag tag);

// One n^{log2(growth_arg)} (log n)^{log_power} summand of x(n).
struct MainTerm {
  Rational growth_arg;
  int log_power = 0;
};

struct DandCClassification {
  CaseTag case_tag = CaseTag::c4;
  std::vector<MainTerm> main_terms;      // decreasing growth, then log power
  bool error_omitted = false;
  bool error_epsilon = false;
  int error_log_power = 0;
  Rational error_base;                    // base of n^{log2(...)} in the O-term
  std::optional<int> extra_log;           // the Case 4 exponent E
  DValues d;
};

// Growth classification of x by direct comparison of alpha+beta, 2^k,
// 2^{k-1} and max(alpha, beta); constant tolls get their own three cases.
DandCClassification classify(const DandCProblem& p);

// x(0..N-1) by direct recurrence, exact; the test oracle.
std::vector<Rational> dandc_oracle(const DandCProblem& p, std::size_t N);

// Compares classify against the spectral engine run on the h-representation:
// main terms must match exactly; error terms must match up to the documented
// epsilon policy; the summed representation must reproduce the oracle.
struct CrossCheckReport {
  bool agree = false;
  std::vector<std::string> mismatches;
  std::vector<std::string> notes;
  DandCClassification classification;
  AsymptoticExpansion engine;
  std::size_t oracle_checked = 0;
};

CrossCheckReport cross_check(const DandCProblem& p, std::size_t oracle_n = 4096);

// Worked min/max-comparison example: representation of the forward difference
// h(n) of x(n) = x(floor(n/2)) + x(ceil(n/2)) + toll, right vector
// (h(n), [n=1], [n=0]), together with oracle values of x.
struct MinmaxFixture {
  LinearRep rep;
  std::vector<Rational> x;  // x(0..n_max)
};

MinmaxFixture minmax_fixture(std::size_t n_max = 4096);

}  // namespace regseq
