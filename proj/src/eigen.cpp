#include "regseq/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace regseq {

namespace {

constexpr double kClusterTol = 1e-9;
constexpr double kNumericRankTol = 1e-9;

Rational poly_eval(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Divides the monic polynomial by (t - r); the caller guarantees r is a root.
std::vector<Rational> deflate(const std::vector<Rational>& coeffs, const Rational& r) {
  size_t n = coeffs.size() - 1;
  std::vector<Rational> q(n);
  q[n - 1] = coeffs[n];
  for (size_t i = n - 1; i-- > 0;) q[i] = coeffs[i + 1] + r * q[i + 1];
  return q;
}

// Continued-fraction convergents of x with denominators up to 1e6. These are
// only proposals; every candidate is verified exactly before use.
void propose_from(double x, std::set<Rational>& out) {
  if (!std::isfinite(x) || std::abs(x) > 1e15) return;
  double rounded = std::round(x);
  out.insert(Rational(static_cast<long>(rounded)));

  const double prop_tol = 1e-2 * std::max(1.0, std::abs(x));
  long long p_prev = 1, q_prev = 0;
  long long p_cur, q_cur;
  double frac = x;
  long long a = static_cast<long long>(std::floor(frac));
  p_cur = a;
  q_cur = 1;
  for (int step = 0; step < 30; ++step) {
    if (q_cur > 1000000) break;
    double approx = static_cast<double>(p_cur) / static_cast<double>(q_cur);
    if (std::abs(approx - x) <= prop_tol) {
      out.insert(Rational(static_cast<long>(p_cur), static_cast<long>(q_cur)));
    }
    if (std::abs(approx - x) < 1e-15) break;
    double rem = frac - static_cast<double>(a);
    if (std::abs(rem) < 1e-15) break;
    frac = 1.0 / rem;
    if (!std::isfinite(frac) || std::abs(frac) > 1e12) break;
    a = static_cast<long long>(std::floor(frac));
    long long p_next = a * p_cur + p_prev;
    long long q_next = a * q_cur + q_prev;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
  }
}

std::vector<double> to_double_coeffs(const std::vector<Rational>& coeffs) {
  // Drop the leading monic 1.
  std::vector<double> d(coeffs.size() - 1);
  for (size_t i = 0; i + 1 < coeffs.size(); ++i) d[i] = coeffs[i].get_d();
  return d;
}

struct Cluster {
  std::complex<double> mean{0.0, 0.0};
  int count = 0;
};

std::vector<Cluster> cluster_roots(const std::vector<std::complex<double>>& roots) {
  std::vector<Cluster> clusters;
  for (const auto& z : roots) {
    Cluster* best = nullptr;
    double best_dist = 0;
    for (auto& c : clusters) {
      double d = std::abs(z - c.mean);
      double tol = kClusterTol * std::max(1.0, std::abs(c.mean));
      if (d <= tol * 1.0 && (best == nullptr || d < best_dist)) {
        best = &c;
        best_dist = d;
      }
    }
    if (best) {
      best->mean = (best->mean * static_cast<double>(best->count) + z) /
                   static_cast<double>(best->count + 1);
      best->count += 1;
    } else {
      clusters.push_back({z, 1});
    }
  }
  for (size_t i = 0; i < clusters.size(); ++i) {
    for (size_t j = i + 1; j < clusters.size(); ++j) {
      double d = std::abs(clusters[i].mean - clusters[j].mean);
      double scale = std::max({1.0, std::abs(clusters[i].mean), std::abs(clusters[j].mean)});
      if (d <= 10.0 * kClusterTol * scale) {
        throw std::runtime_error("numerically ambiguous clustering of eigenvalues");
      }
    }
  }
  // Snap nearly-real clusters onto the real axis.
  for (auto& c : clusters) {
    if (std::abs(c.mean.imag()) <= kClusterTol * std::max(1.0, std::abs(c.mean))) {
      c.mean = {c.mean.real(), 0.0};
    }
  }
  return clusters;
}

int complex_rank(std::vector<std::vector<std::complex<double>>> a, double tol_scale) {
  int rows = static_cast<int>(a.size());
  int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  double tol = kNumericRankTol * std::max(1.0, tol_scale);
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int pivot = -1;
    double best = tol;
    for (int i = r; i < rows; ++i) {
      double m = std::abs(a[i][col]);
      if (m > best) {
        best = m;
        pivot = i;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[r]);
    for (int i = r + 1; i < rows; ++i) {
      std::complex<double> f = a[i][col] / a[r][col];
      for (int j = col; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

bool Eigenvalue::is_real() const {
  if (exact) return true;
  return std::abs(approx.imag()) <= kClusterTol * std::max(1.0, std::abs(approx));
}

std::vector<Rational> char_poly(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  int n = m.rows();
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  c[n] = 1;
  // Faddeev-LeVerrier: exact, O(n^4) rational ops, fine at these sizes.
  RatMatrix mk = m;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      RatMatrix shifted = mk;
      for (int i = 0; i < n; ++i) shifted.at(i, i) += c[n - k + 1];
      mk = m * shifted;
    }
    c[n - k] = -mk.trace() / k;
  }
  return c;
}

std::vector<std::complex<double>> poly_roots(const std::vector<double>& coeffs) {
  int n = static_cast<int>(coeffs.size());
  if (n == 0) return {};
  double radius = 0;
  for (double c : coeffs) radius = std::max(radius, std::abs(c));
  radius = 1.0 + radius;

  std::vector<std::complex<double>> z(n);
  for (int i = 0; i < n; ++i) {
    double ang = 2.0 * M_PI * (i + 0.25) / n + 0.4;
    double mod = radius * (0.5 + 0.5 * (i + 1.0) / n);
    z[i] = std::polar(mod, ang);
  }

  auto eval = [&](std::complex<double> x) {
    std::complex<double> acc(1.0, 0.0);
    for (int i = n - 1; i >= 0; --i) acc = acc * x + coeffs[i];
    return acc;
  };

  for (int iter = 0; iter < 2000; ++iter) {
    double worst = 0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> denom(1.0, 0.0);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        std::complex<double> diff = z[i] - z[j];
        if (std::abs(diff) < 1e-30) diff = {1e-30, 1e-30};
        denom *= diff;
      }
      std::complex<double> w = eval(z[i]) / denom;
      z[i] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(z[i])));
    }
    if (worst < 1e-14) break;
  }
  return z;
}

EigenStructure eigenvalues(const RatMatrix& m, bool with_jordan) {
  EigenStructure out;
  out.dim = m.rows();
  std::vector<Rational> remaining = char_poly(m);
  std::map<Rational, int> exact_mult;

  // Peel off rational roots exactly; numeric roots only nominate candidates.
  bool progress = true;
  while (progress && remaining.size() > 1) {
    progress = false;
    std::set<Rational> candidates;
    for (const auto& z : poly_roots(to_double_coeffs(remaining))) {
      propose_from(z.real(), candidates);
    }
    for (const auto& cand : candidates) {
      while (remaining.size() > 1 && poly_eval(remaining, cand) == 0) {
        remaining = deflate(remaining, cand);
        exact_mult[cand] += 1;
        progress = true;
      }
    }
  }

  for (const auto& [rat, mult] : exact_mult) {
    EigenEntry e;
    e.value.exact = true;
    e.value.rat = rat;
    e.value.approx = {rat.get_d(), 0.0};
    e.multiplicity = mult;
    if (with_jordan) {
      e.jordan_index = jordan_index(m, rat);
      e.jordan_exact = true;
    }
    out.entries.push_back(std::move(e));
  }

  if (remaining.size() > 1) {
    auto clusters = cluster_roots(poly_roots(to_double_coeffs(remaining)));
    for (const auto& c : clusters) {
      EigenEntry e;
      e.value.exact = false;
      e.value.approx = c.mean;
      e.multiplicity = c.count;
      if (with_jordan) {
        e.jordan_index = jordan_index_numeric(m, c.mean);
        e.jordan_exact = false;
      }
      out.entries.push_back(std::move(e));
    }
  }

  std::sort(out.entries.begin(), out.entries.end(), [](const EigenEntry& a, const EigenEntry& b) {
    double ma = a.value.modulus(), mb = b.value.modulus();
    if (std::abs(ma - mb) > 1e-12 * std::max({1.0, ma, mb})) return ma > mb;
    if (a.value.approx.real() != b.value.approx.real()) return a.value.approx.real() > b.value.approx.real();
    return a.value.approx.imag() > b.value.approx.imag();
  });
  return out;
}

int jordan_index(const RatMatrix& m, const Rational& lambda) {
  int n = m.rows();
  RatMatrix p = m;
  for (int i = 0; i < n; ++i) p.at(i, i) -= lambda;
  RatMatrix pk = p;
  int prev_nullity = n - rank(pk);
  if (prev_nullity == 0) return 0;
  for (int j = 1; j <= n; ++j) {
    RatMatrix pk1 = pk * p;
    int next_nullity = n - rank(pk1);
    if (next_nullity == prev_nullity) return j;
    prev_nullity = next_nullity;
    pk = std::move(pk1);
  }
  return n;
}

int jordan_index_numeric(const RatMatrix& m, std::complex<double> lambda) {
  int n = m.rows();
  std::vector<std::vector<std::complex<double>>> p(n, std::vector<std::complex<double>>(n));
  double scale = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      p[i][j] = std::complex<double>(m.at(i, j).get_d(), 0.0);
      if (i == j) p[i][j] -= lambda;
      scale = std::max(scale, std::abs(p[i][j]));
    }
  }
  auto mul = [n](const auto& a, const auto& b) {
    std::vector<std::vector<std::complex<double>>> r(n, std::vector<std::complex<double>>(n));
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        if (a[i][k] == std::complex<double>(0.0, 0.0)) continue;
        for (int j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
      }
    }
    return r;
  };
  auto pk = p;
  int prev_nullity = n - complex_rank(pk, scale);
  if (prev_nullity == 0) return 0;
  double power_scale = scale;
  for (int j = 1; j <= n; ++j) {
    auto pk1 = mul(pk, p);
    power_scale *= std::max(1.0, scale);
    int next_nullity = n - complex_rank(pk1, power_scale);
    if (next_nullity == prev_nullity) return j;
    prev_nullity = next_nullity;
    pk = std::move(pk1);
  }
  return n;
}

SpectralRadius spectral_radius(const RatMatrix& m) {
  EigenStructure es = eigenvalues(m, false);
  SpectralRadius out;
  if (es.entries.empty()) return out;
  double top = es.entries.front().value.modulus();
  out.value = top;
  bool all_exact_at_top = true;
  bool have_rat = false;
  Rational best;
  for (const auto& e : es.entries) {
    double mod = e.value.modulus();
    if (mod >= top - 1e-9 * std::max(1.0, top)) {
      if (!e.value.exact) {
        all_exact_at_top = false;
      } else {
        Rational a = abs_value(e.value.rat);
        if (!have_rat || a > best) best = a;
        have_rat = true;
      }
    }
  }
  if (all_exact_at_top && have_rat) {
    out.exact = true;
    out.exact_value = best;
    out.value = best.get_d();
  }
  return out;
}

}  // namespace regseq
