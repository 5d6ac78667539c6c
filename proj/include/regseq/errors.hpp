#pragma once

#include <stdexcept>

namespace regseq {

// Raised when spectral-radius bounds are too loose to decide a comparison.
struct InconclusiveJsr : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an input falls outside the hypotheses of the analysis.
struct HypothesisViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when empirical sampling shows no sign of settling down.
struct NonConvergent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace regseq
