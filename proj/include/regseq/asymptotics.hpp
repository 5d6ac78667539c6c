#pragma once

#include "regseq/eigen.hpp"
#include "regseq/errors.hpp"
#include "regseq/jsr.hpp"
#include "regseq/summation.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace regseq {

// The cut radius R between kept terms and the error term.
struct RSelection {
  double value = 0.0;
  bool epsilon = false;                   // R was pushed strictly above rho
  std::optional<Rational> exact;          // R itself, when rational
  std::optional<Rational> exact_square;   // R^2, when only that is rational
  std::string policy;
};

// growth.holds forces R = rho. Otherwise R = sqrt(rho * lambda_next) with
// lambda_next the smallest eigenvalue modulus strictly above rho, falling
// back to rho * q^0.01 when nothing lies above. Requires bounds on rho tight
// enough to place every eigenvalue modulus on a definite side.
RSelection choose_R(const JsrResult& rho, const GrowthAssessment& growth,
                    const EigenStructure& spectrum, int q);

// One N^{log_q lambda} (log N)^k / k! * Phi(frac(log_q N)) summand.
struct ExpansionTerm {
  Eigenvalue lambda;
  int log_power = 0;
  std::complex<double> exponent{0.0, 0.0};     // log_q lambda, principal branch
  std::optional<Rational> exact_exponent;      // when lambda = q^j exactly
};

struct ErrorTerm {
  bool omitted = false;
  bool epsilon = false;
  int log_power = 0;                       // kappa
  bool kappa_empty_convention = false;     // kappa came from an empty max
  double exponent = 0.0;                   // log_q R
  std::optional<Rational> exact_exponent;
  std::optional<Rational> base;            // R when rational
  std::optional<Rational> base_square;     // R^2 when only that is rational
};

// Description of sum_{n<N} x(n): kept terms are the eigenvalues of C above R
// with one summand per Jordan level; everything else is absorbed into
// O(N^{log_q R} (log N)^kappa).
struct AsymptoticExpansion {
  int q = 2;
  RatMatrix c_matrix;
  EigenStructure spectrum;
  JsrResult rho;
  GrowthAssessment growth;
  RSelection cut;
  std::vector<ExpansionTerm> terms;  // decreasing |lambda|, then decreasing k
  ErrorTerm error;
  std::vector<std::string> notes;
};

AsymptoticExpansion expansion(const LinearRep& rep, int product_length = 8);

// Smallest k >= 1 such that the k-fold running sum of x keeps at least one
// explicit term (k = 1 analyzes rep itself, k >= 2 the (k-1)-fold sum rep).
struct SmoothingResult {
  int order = 1;
  SpectralRadius c_radius;     // of the input's C
  AsymptoticExpansion found;   // the expansion at the returned order
  std::string witness;
};

SmoothingResult minimal_smoothing_order(const LinearRep& rep, int max_order = 64,
                                        int product_length = 8);

struct FluctuationSample {
  double u = 0.0;
  int m = 0;
  std::complex<double> value{0.0, 0.0};
};

struct FluctuationEstimate {
  Eigenvalue lambda;
  int log_power = 0;
  int grid_size = 0;
  std::vector<int> scales;                     // sorted m values
  std::vector<FluctuationSample> samples;      // grid-major: all m for u0, then u1, ...
  std::vector<std::complex<double>> limit;     // per grid point; see note below
  std::vector<std::string> warnings;
};

// Empirical periodic-fluctuation values: for grid point u and scale m,
//   N = round(q^{m+u})
//   value = (S(N) - contributions of previously estimated terms)
//           * N^{-log_q lambda} * k! / (log N)^k
// with S(N) = sum_{n<N} x(n) evaluated exactly. `previous` must hold the
// estimates of all terms that dominate terms[term_index].
// limit[u] extrapolates the samples in powers of 1/log N (k >= 1); for k = 0
// it is the sample at the largest scale.
FluctuationEstimate sample_fluctuation(const LinearRep& rep, const AsymptoticExpansion& exp,
                                       std::size_t term_index, int grid_size,
                                       const std::vector<int>& m_list,
                                       const std::vector<FluctuationEstimate>& previous);

// Runs sample_fluctuation for terms 0..last_term in dominance order.
std::vector<FluctuationEstimate> estimate_fluctuations(const LinearRep& rep,
                                                       const AsymptoticExpansion& exp,
                                                       std::size_t last_term, int grid_size = 64,
                                                       std::vector<int> m_list = {8, 12, 16, 20, 24});

struct FourierCoefficient {
  int index = 0;
  std::complex<double> value{0.0, 0.0};
  double gap = 0.0;  // |same coefficient from the second-largest scale - value|
};

// DFT of the largest-scale sample row; index 0 is the mean over the grid.
// Requires grid_size >= 4*max_index + 4 and at least two scales.
std::vector<FourierCoefficient> fourier_coefficients(const FluctuationEstimate& est, int max_index);

}  // namespace regseq
