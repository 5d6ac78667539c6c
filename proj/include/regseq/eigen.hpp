#pragma once

#include "regseq/matrix.hpp"

#include <complex>
#include <vector>

namespace regseq {

// An eigenvalue, exact when it was verified as a rational root of the
// characteristic polynomial, otherwise a clustered numeric root.
struct Eigenvalue {
  bool exact = false;
  Rational rat;                    // meaningful only when exact
  std::complex<double> approx{0.0, 0.0};

  double modulus() const { return std::abs(approx); }
  bool is_real() const;
};

struct EigenEntry {
  Eigenvalue value;
  int multiplicity = 0;   // algebraic
  int jordan_index = 0;   // size of the largest Jordan block
  bool jordan_exact = false;
};

struct EigenStructure {
  int dim = 0;
  std::vector<EigenEntry> entries;  // decreasing modulus, then decreasing (re, im)
};

// Monic characteristic polynomial, coefficients c[0] + c[1]*t + ... + t^n.
std::vector<Rational> char_poly(const RatMatrix& m);

// Roots of a monic polynomial with double coefficients (c[0..n-1], implicit
// leading 1), via simultaneous Durand-Kerner iteration.
std::vector<std::complex<double>> poly_roots(const std::vector<double>& coeffs);

// Full spectrum. Rational roots are split off exactly; the rest is solved
// numerically and clustered at relative tolerance 1e-9. Two distinct clusters
// closer than 10x that tolerance raise std::runtime_error (ambiguous).
EigenStructure eigenvalues(const RatMatrix& m, bool with_jordan = true);

// Size of the largest Jordan block of lambda: the smallest j >= 1 where
// nullity((M - lambda I)^j) stops growing; 0 when lambda is not an eigenvalue.
int jordan_index(const RatMatrix& m, const Rational& lambda);
int jordan_index_numeric(const RatMatrix& m, std::complex<double> lambda);

// Largest eigenvalue modulus with exactness tracking.
struct SpectralRadius {
  double value = 0.0;
  bool exact = false;
  Rational exact_value;  // meaningful only when exact
};
SpectralRadius spectral_radius(const RatMatrix& m);

}  // namespace regseq
