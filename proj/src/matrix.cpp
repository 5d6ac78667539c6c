#include "regseq/matrix.hpp"

#include <stdexcept>

namespace regseq {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in +");
  RatMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in -");
  RatMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in *");
  RatMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        r.at(i, j) += aik * o.at(k, j);
      }
    }
  }
  return r;
}

RatVector RatMatrix::operator*(const RatVector& v) const {
  if (cols_ != static_cast<int>(v.size())) throw std::invalid_argument("matrix/vector shape mismatch");
  RatVector r(rows_);
  for (int i = 0; i < rows_; ++i) {
    Rational acc(0);
    for (int j = 0; j < cols_; ++j) acc += at(i, j) * v[j];
    r[i] = acc;
  }
  return r;
}

RatMatrix RatMatrix::scaled(const Rational& c) const {
  RatMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : a_) {
    if (x != 0) return false;
  }
  return true;
}

void RatMatrix::set_block(int i0, int j0, const RatMatrix& b) {
  if (i0 + b.rows_ > rows_ || j0 + b.cols_ > cols_) throw std::invalid_argument("block out of range");
  for (int i = 0; i < b.rows_; ++i) {
    for (int j = 0; j < b.cols_; ++j) at(i0 + i, j0 + j) = b.at(i, j);
  }
}

RatMatrix RatMatrix::block(int i0, int j0, int r, int c) const {
  if (i0 + r > rows_ || j0 + c > cols_) throw std::invalid_argument("block out of range");
  RatMatrix b(r, c);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) b.at(i, j) = at(i0 + i, j0 + j);
  }
  return b;
}

Rational RatMatrix::trace() const {
  Rational t(0);
  for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
  return t;
}

RatMatrix RatMatrix::inverse() const {
  if (rows_ != cols_) throw std::domain_error("inverse of non-square matrix");
  int n = rows_;
  RatMatrix a = *this;
  RatMatrix inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i) {
      if (a.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) throw std::domain_error("singular matrix");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        swap(a.at(pivot, j), a.at(col, j));
        swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    Rational p = a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      Rational f = a.at(i, col);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch in dot");
  Rational acc(0);
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

RatVector row_times(const RatVector& row, const RatMatrix& m) {
  if (static_cast<int>(row.size()) != m.rows()) throw std::invalid_argument("vector/matrix shape mismatch");
  RatVector r(m.cols());
  for (int j = 0; j < m.cols(); ++j) {
    Rational acc(0);
    for (int i = 0; i < m.rows(); ++i) acc += row[i] * m.at(i, j);
    r[j] = acc;
  }
  return r;
}

int rank(const RatMatrix& m) {
  RatMatrix a = m;
  int rows = a.rows(), cols = a.cols();
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (a.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int j = 0; j < cols; ++j) swap(a.at(pivot, j), a.at(r, j));
    }
    Rational p = a.at(r, col);
    for (int i = r + 1; i < rows; ++i) {
      Rational f = a.at(i, col) / p;
      if (f == 0) continue;
      for (int j = col; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace regseq
