#include "regseq/representation.hpp"

#include <stdexcept>

namespace regseq {

std::vector<int> digits(std::uint64_t n, int q) {
  if (q < 2) throw std::invalid_argument("digit base must be at least 2");
  std::vector<int> d;
  while (n > 0) {
    d.push_back(static_cast<int>(n % static_cast<std::uint64_t>(q)));
    n /= static_cast<std::uint64_t>(q);
  }
  return d;
}

std::optional<std::string> validate(const LinearRep& rep) {
  if (rep.q < 2) return "q must be at least 2, found " + std::to_string(rep.q);
  if (rep.dim < 1) return "dimension must be at least 1, found " + std::to_string(rep.dim);
  if (static_cast<int>(rep.matrices.size()) != rep.q) {
    return "expected " + std::to_string(rep.q) + " matrices, found " + std::to_string(rep.matrices.size());
  }
  if (static_cast<int>(rep.u.size()) != rep.dim) {
    return "u dimension " + std::to_string(rep.u.size()) + " ≠ D=" + std::to_string(rep.dim);
  }
  for (int r = 0; r < rep.q; ++r) {
    const RatMatrix& m = rep.matrices[r];
    if (m.rows() != rep.dim || m.cols() != rep.dim) {
      return "matrix " + std::to_string(r) + " shape " + std::to_string(m.rows()) + "x" +
             std::to_string(m.cols()) + " ≠ " + std::to_string(rep.dim) + "x" +
             std::to_string(rep.dim);
    }
  }
  if (static_cast<int>(rep.w.size()) != rep.dim) {
    return "w dimension " + std::to_string(rep.w.size()) + " ≠ D=" + std::to_string(rep.dim);
  }
  return std::nullopt;
}

void require_valid(const LinearRep& rep) {
  if (auto defect = validate(rep)) throw std::invalid_argument(*defect);
}

RatVector evaluate_vector(const LinearRep& rep, std::uint64_t n) {
  RatVector v = rep.w;
  // Right-to-left over digits so each step is one matrix-vector product.
  std::vector<int> d = digits(n, rep.q);
  for (auto it = d.rbegin(); it != d.rend(); ++it) {
    v = rep.matrices[*it] * v;
  }
  return v;
}

Rational evaluate(const LinearRep& rep, std::uint64_t n) {
  return dot(rep.u, evaluate_vector(rep, n));
}

std::vector<RatVector> evaluate_vector_prefix(const LinearRep& rep, std::size_t N) {
  std::vector<RatVector> v;
  v.reserve(N);
  if (N == 0) return v;
  v.push_back(rep.w);
  for (std::size_t m = 1; m < N; ++m) {
    int r = static_cast<int>(m % static_cast<std::size_t>(rep.q));
    v.push_back(rep.matrices[r] * v[m / static_cast<std::size_t>(rep.q)]);
  }
  return v;
}

std::vector<Rational> evaluate_prefix(const LinearRep& rep, std::size_t N) {
  std::vector<RatVector> v = evaluate_vector_prefix(rep, N);
  std::vector<Rational> x;
  x.reserve(N);
  for (const auto& vec : v) x.push_back(dot(rep.u, vec));
  return x;
}

}  // namespace regseq
