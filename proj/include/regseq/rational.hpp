#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace regseq {

// Exact rational scalar. mpq_class keeps values canonicalized (lowest terms,
// positive denominator), which is exactly the invariant we need.
using Rational = mpq_class;

// Accepts "p" or "p/q" with an optional leading '-', base 10 only.
// Throws std::invalid_argument on anything else (including zero denominators).
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }

// base^exp for integral exp; exp < 0 requires base != 0.
Rational rational_pow(const Rational& base, long exp);

inline Rational abs_value(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline int sign_of(const Rational& r) { return sgn(r); }

// The integer j with value = q^j, if such j exists (value must be positive).
std::optional<long> exact_log(const Rational& value, int q);

Rational binomial(unsigned long n, unsigned long k);

}  // namespace regseq
