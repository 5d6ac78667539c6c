#pragma once

#include "regseq/rational.hpp"

#include <vector>

namespace regseq {

using RatVector = std::vector<Rational>;

// Dense matrix over exact rationals. Dimensions in this project stay tiny
// (a few dozen at most), so no sparsity or pivot-size tricks are needed.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatVector operator*(const RatVector& v) const;
  RatMatrix scaled(const Rational& c) const;

  bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const RatMatrix& o) const { return !(*this == o); }

  bool is_zero() const;

  void set_block(int i0, int j0, const RatMatrix& b);
  RatMatrix block(int i0, int j0, int r, int c) const;

  Rational trace() const;

  // Exact inverse via Gauss-Jordan; throws std::domain_error when singular.
  RatMatrix inverse() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

Rational dot(const RatVector& a, const RatVector& b);
RatVector row_times(const RatVector& row, const RatMatrix& m);

// Exact column rank by fraction-free elimination.
int rank(const RatMatrix& m);

}  // namespace regseq
