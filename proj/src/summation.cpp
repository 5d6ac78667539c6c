#include "regseq/summation.hpp"

#include <stdexcept>

namespace regseq {

SummationMatrices summation_matrices(const LinearRep& rep) {
  require_valid(rep);
  SummationMatrices s;
  s.b.reserve(rep.q);
  RatMatrix acc(rep.dim, rep.dim);
  for (int r = 0; r < rep.q; ++r) {
    s.b.push_back(acc);
    acc = acc + rep.matrices[r];
  }
  s.c = acc;
  return s;
}

LinearRep summatory_rep(const LinearRep& rep) {
  SummationMatrices s = summation_matrices(rep);
  int d = rep.dim;
  LinearRep out;
  out.q = rep.q;
  out.dim = 2 * d;
  out.u.assign(2 * d, Rational(0));
  for (int i = 0; i < d; ++i) out.u[i] = rep.u[i];
  out.w.assign(2 * d, Rational(0));
  for (int i = 0; i < d; ++i) out.w[d + i] = rep.w[i];
  for (int r = 0; r < rep.q; ++r) {
    RatMatrix m(2 * d, 2 * d);
    m.set_block(0, 0, s.c);
    m.set_block(0, d, s.b[r]);
    m.set_block(d, d, rep.matrices[r]);
    out.matrices.push_back(m);
  }
  return out;
}

IteratedSummationRep iterated_summatory_rep(const LinearRep& rep, int k) {
  if (k < 1) throw std::invalid_argument("summation order must be at least 1");
  require_valid(rep);
  const int d = rep.dim;

  IteratedSummationRep out;
  out.order = k;
  out.base_dim = d;
  out.rep = summatory_rep(rep);
  {
    SummationMatrices s = summation_matrices(rep);
    out.coupling.push_back({s.b});
  }

  for (int m = 1; m < k; ++m) {
    const LinearRep& cur = out.rep;
    int cd = cur.dim;  // (m+1)*d
    RatMatrix csum(cd, cd);
    for (int r = 0; r < cur.q; ++r) csum = csum + cur.matrices[r];

    LinearRep next;
    next.q = cur.q;
    next.dim = cd + d;
    next.u.assign(next.dim, Rational(0));
    for (int i = 0; i < d; ++i) next.u[i] = rep.u[i];
    next.w.assign(next.dim, Rational(0));
    for (int i = 0; i < d; ++i) next.w[cd + i] = rep.w[i];

    std::vector<std::vector<RatMatrix>> level(static_cast<size_t>(m + 1));
    RatMatrix bsum(cd, cd);
    for (int r = 0; r < cur.q; ++r) {
      RatMatrix t(next.dim, next.dim);
      // Top row couples the new (m+1)-fold sum to every lower-order sum.
      t.set_block(0, 0, csum.block(0, 0, d, d));
      for (int j = 1; j <= m; ++j) {
        t.set_block(0, j * d, csum.block(0, j * d, d, d) + bsum.block(0, (j - 1) * d, d, d));
      }
      t.set_block(0, (m + 1) * d, bsum.block(0, m * d, d, d));
      // Lower-order sums evolve exactly as before, shifted one block.
      t.set_block(d, d, cur.matrices[r]);
      next.matrices.push_back(t);
      bsum = bsum + cur.matrices[r];
    }
    for (int j = 0; j <= m; ++j) {
      std::vector<RatMatrix> per_digit;
      for (int r = 0; r < next.q; ++r) {
        per_digit.push_back(next.matrices[r].block(0, (m + 1 - j) * d, d, d));
      }
      level[static_cast<size_t>(j)] = std::move(per_digit);
    }
    out.coupling.push_back(std::move(level));
    out.rep = std::move(next);
  }
  return out;
}

Rational direct_ksum(const LinearRep& rep, int k, std::size_t N) {
  if (k < 0) throw std::invalid_argument("summation order must be non-negative");
  if (k == 0) return evaluate(rep, N);
  std::vector<Rational> cur = evaluate_prefix(rep, N);
  for (int round = 0; round < k; ++round) {
    std::vector<Rational> sums;
    sums.reserve(N + 1);
    Rational acc(0);
    sums.push_back(acc);
    for (std::size_t i = 0; i < N; ++i) {
      acc += cur[i];
      sums.push_back(acc);
    }
    cur = std::move(sums);
  }
  return cur[N];
}

}  // namespace regseq
