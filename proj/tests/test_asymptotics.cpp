#include "regseq/asymptotics.hpp"

#include <cmath>
#include <complex>

#include "doctest.h"
#include "helpers.hpp"
#include "regseq/dandc.hpp"

using namespace regseq;

namespace {

EigenStructure spectrum_of(std::vector<double> moduli) {
  EigenStructure s;
  s.dim = static_cast<int>(moduli.size());
  for (double m : moduli) {
    EigenEntry e;
    e.value.approx = {m, 0.0};
    e.multiplicity = 1;
    e.jordan_index = 1;
    s.entries.push_back(e);
  }
  return s;
}

}  // namespace

TEST_CASE("cut radius: growth criterion pins R at rho") {
  JsrResult rho;
  rho.lower = rho.upper = 2.0;
  rho.exact = true;
  rho.exact_value = Rational(2);
  GrowthAssessment g{true, "test"};
  auto r = choose_R(rho, g, spectrum_of({4.0, 2.0}), 2);
  CHECK(!r.epsilon);
  CHECK(r.value == doctest::Approx(2.0));
  REQUIRE(r.exact.has_value());
  CHECK(*r.exact == 2);
}

TEST_CASE("cut radius: geometric mean with the next eigenvalue modulus") {
  JsrResult rho;
  rho.lower = rho.upper = 1.0;
  rho.exact = true;
  rho.exact_value = Rational(1);
  GrowthAssessment g{false, "test"};
  EigenStructure s;
  EigenEntry e;
  e.value.exact = true;
  e.value.rat = 2;
  e.value.approx = {2.0, 0.0};
  e.multiplicity = 2;
  e.jordan_index = 2;
  s.dim = 2;
  s.entries.push_back(e);
  auto r = choose_R(rho, g, s, 2);
  CHECK(r.epsilon);
  CHECK(r.value == doctest::Approx(std::sqrt(2.0)));
  CHECK(!r.exact.has_value());
  REQUIRE(r.exact_square.has_value());
  CHECK(*r.exact_square == 2);
}

TEST_CASE("cut radius: nothing above rho leaves the epsilon margin") {
  JsrResult rho;
  rho.lower = rho.upper = 1.0;
  rho.exact = true;
  rho.exact_value = Rational(1);
  GrowthAssessment g{false, "test"};
  auto r = choose_R(rho, g, spectrum_of({1.0, 0.5}), 2);
  CHECK(r.epsilon);
  CHECK(r.value == doctest::Approx(std::pow(2.0, 0.01)));
  CHECK(!r.exact.has_value());
  CHECK(r.policy.find("q^(1/100)") != std::string::npos);
}

TEST_CASE("cut radius: a loose JSR interval around an eigenvalue modulus is fatal") {
  JsrResult rho;
  rho.lower = 0.9;
  rho.upper = 1.1;
  rho.exact = false;
  GrowthAssessment g{false, "test"};
  CHECK_THROWS_AS(choose_R(rho, g, spectrum_of({2.0, 1.0}), 2), InconclusiveJsr);
}

TEST_CASE("expansion of the binary sum-of-digits sequence") {
  auto e = expansion(testing::s2_rep());
  REQUIRE(e.terms.size() == 2);
  CHECK(e.terms[0].lambda.rat == 2);
  CHECK(e.terms[0].log_power == 1);
  CHECK(e.terms[1].log_power == 0);
  REQUIRE(e.terms[0].exact_exponent.has_value());
  CHECK(*e.terms[0].exact_exponent == 1);

  // every eigenvalue modulus exceeds R, so the remainder can be dropped
  CHECK(e.error.omitted);
  CHECK(e.error.epsilon);
  CHECK(e.error.log_power == 0);
  CHECK(e.error.kappa_empty_convention);
  REQUIRE(e.error.base_square.has_value());
  CHECK(*e.error.base_square == 2);
  REQUIRE(e.error.exact_exponent.has_value());
  CHECK(*e.error.exact_exponent == Rational(1, 2));
}

TEST_CASE("expansion with no kept term: the alternating parity sequence") {
  auto e = expansion(testing::tm_rep());
  CHECK(e.terms.empty());
  CHECK(!e.error.omitted);
  CHECK(!e.error.epsilon);  // growth criterion holds on a single coordinate
  REQUIRE(e.error.base.has_value());
  CHECK(*e.error.base == 1);
  CHECK(e.error.exponent == doctest::Approx(0.0));
}

TEST_CASE("expansion of the min/max difference fixture keeps exactly one term") {
  auto mm = minmax_fixture(4);
  auto e = expansion(mm.rep);
  REQUIRE(e.terms.size() == 1);
  CHECK(e.terms[0].lambda.rat == 2);
  CHECK(e.terms[0].log_power == 0);
  CHECK(e.error.epsilon);
  REQUIRE(e.error.base_square.has_value());
  CHECK(*e.error.base_square == 2);
}

TEST_CASE("expansion survives an identically vanishing product family") {
  auto e = expansion(testing::nilpotent2_rep());
  CHECK(e.terms.empty());
  CHECK(e.cut.value == 0.0);
  CHECK(std::isinf(e.error.exponent));
  CHECK(e.error.exponent < 0);
  CHECK(e.error.log_power == 2);  // C = [[0,2],[0,0]] has a size-2 block at 0
  CHECK(!e.error.kappa_empty_convention);
}

TEST_CASE("one attained kappa: the identity sequence x(n) = n") {
  LinearRep rep;
  rep.q = 2;
  rep.dim = 2;
  rep.u = {1, 0};
  rep.w = {0, 1};
  RatMatrix a0(2, 2), a1(2, 2);
  a0.at(0, 0) = 2;
  a0.at(1, 1) = 1;
  a1 = a0;
  a1.at(0, 1) = 1;
  rep.matrices = {a0, a1};
  auto e = expansion(rep);
  REQUIRE(e.terms.size() == 1);
  CHECK(e.terms[0].lambda.rat == 4);
  REQUIRE(e.terms[0].exact_exponent.has_value());
  CHECK(*e.terms[0].exact_exponent == 2);
  CHECK(!e.error.epsilon);
  CHECK(e.error.log_power == 1);
  CHECK(!e.error.kappa_empty_convention);
  REQUIRE(e.error.base.has_value());
  CHECK(*e.error.base == 2);
}

TEST_CASE("minimal smoothing order") {
  CHECK(minimal_smoothing_order(testing::s2_rep()).order == 1);
  CHECK(minimal_smoothing_order(testing::zero2_rep()).order == 2);
  CHECK_THROWS_WITH_AS(minimal_smoothing_order(testing::tm_rep()),
                       "theorem hypothesis violated: C=0", HypothesisViolation);
  CHECK_THROWS_WITH_AS(minimal_smoothing_order(testing::nilpotent2_rep()),
                       "nilpotent C: no finite order", HypothesisViolation);
}

TEST_CASE("min/max fixture fluctuation samples approach 3/2") {
  auto mm = minmax_fixture(4);
  auto e = expansion(mm.rep);
  auto est = sample_fluctuation(mm.rep, e, 0, 4, {10, 12}, {});
  bool seen = false;
  for (const auto& s : est.samples) {
    if (s.u == 0.0 && s.m == 12) {
      seen = true;
      CHECK(s.value.real() == doctest::Approx(1.5 - std::pow(2.0, -11)).epsilon(1e-9));
      CHECK(s.value.imag() == doctest::Approx(0.0));
    }
  }
  CHECK(seen);

  // same u, consecutive scales: the periodic profile repeats
  auto rep2 = sample_fluctuation(mm.rep, e, 0, 1, {20, 21}, {});
  REQUIRE(rep2.samples.size() == 2);
  CHECK(std::abs(rep2.samples[0].value - rep2.samples[1].value) < 1e-3);
}

TEST_CASE("identically zero sequences flag the vanishing fluctuation") {
  LinearRep rep;
  rep.q = 2;
  rep.dim = 1;
  rep.u = {1};
  rep.w = {0};
  RatMatrix one(1, 1);
  one.at(0, 0) = 1;
  rep.matrices = {one, one};
  auto e = expansion(rep);
  REQUIRE(!e.terms.empty());
  auto est = sample_fluctuation(rep, e, 0, 4, {6, 8, 10}, {});
  for (const auto& s : est.samples) CHECK(std::abs(s.value) == 0.0);
  REQUIRE(!est.warnings.empty());
  CHECK(est.warnings[0].find("vanish") != std::string::npos);
}

TEST_CASE("a fabricated undersized exponent makes the sampler report divergence") {
  auto rep = testing::s2_rep();
  AsymptoticExpansion fake;
  fake.q = 2;
  ExpansionTerm t;
  t.lambda.exact = true;
  t.lambda.rat = 1;
  t.lambda.approx = {1.0, 0.0};
  t.log_power = 0;
  t.exponent = {0.0, 0.0};
  fake.terms.push_back(t);
  CHECK_THROWS_AS(sample_fluctuation(rep, fake, 0, 8, {4, 6, 8}, {}), NonConvergent);
}

TEST_CASE("sampling validates its inputs") {
  auto rep = testing::s2_rep();
  auto e = expansion(rep);
  CHECK_THROWS_AS(sample_fluctuation(rep, e, 7, 4, {4, 6}, {}), std::invalid_argument);
  CHECK_THROWS_AS(sample_fluctuation(rep, e, 1, 4, {4, 6}, {}), std::invalid_argument);
}

TEST_CASE("digit-sum fluctuations: the log-linear coefficient is 1/(2 ln 2)") {
  auto rep = testing::s2_rep();
  auto e = expansion(rep);
  auto ests = estimate_fluctuations(rep, e, 1, 8);
  REQUIRE(ests.size() == 2);
  const double want = 1.0 / (2.0 * std::log(2.0));
  REQUIRE(ests[0].limit.size() == 8);
  for (const auto& l : ests[0].limit) {
    CHECK(std::abs(l - std::complex<double>(want, 0.0)) < 2e-3);
  }
  REQUIRE(ests[1].limit.size() == 8);
  for (const auto& l : ests[1].limit) CHECK(std::isfinite(std::abs(l)));
}

TEST_CASE("Fourier coefficients: a pure first harmonic lands on index 1") {
  FluctuationEstimate est;
  est.grid_size = 8;
  est.scales = {1, 2};
  for (int j = 0; j < 8; ++j) {
    double ang = 2.0 * M_PI * j / 8.0;
    std::complex<double> v(std::cos(ang), std::sin(ang));
    for (int m : est.scales) est.samples.push_back({j / 8.0, m, v});
  }
  auto fc = fourier_coefficients(est, 1);
  REQUIRE(fc.size() == 3);
  CHECK(fc[0].index == -1);
  CHECK(std::abs(fc[0].value) < 1e-12);
  CHECK(std::abs(fc[1].value) < 1e-12);
  CHECK(std::abs(fc[2].value - std::complex<double>(1.0, 0.0)) < 1e-12);
  for (const auto& c : fc) CHECK(c.gap < 1e-12);
}

TEST_CASE("Fourier coefficients of an asymptotically constant fluctuation") {
  LinearRep rep;
  rep.q = 2;
  rep.dim = 2;
  rep.u = {1, 0};
  rep.w = {0, 1};
  RatMatrix a0(2, 2), a1(2, 2);
  a0.at(0, 0) = 2;
  a0.at(1, 1) = 1;
  a1 = a0;
  a1.at(0, 1) = 1;
  rep.matrices = {a0, a1};
  auto e = expansion(rep);
  auto est = sample_fluctuation(rep, e, 0, 8, {10, 12, 14}, {});
  auto fc = fourier_coefficients(est, 1);
  REQUIRE(fc.size() == 3);
  CHECK(std::abs(fc[1].value - std::complex<double>(0.5, 0.0)) < 1e-3);
  CHECK(std::abs(fc[0].value) < 1e-3);
  CHECK(std::abs(fc[2].value) < 1e-3);

  CHECK_THROWS_AS(fourier_coefficients(est, 2), std::invalid_argument);
  FluctuationEstimate single = est;
  single.scales = {14};
  CHECK_THROWS_AS(fourier_coefficients(single, 1), std::invalid_argument);
}
