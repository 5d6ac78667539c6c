#include "regseq/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace regseq {

namespace {

constexpr double kModTol = 1e-9;

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  mpz_class num = r.get_num(), den = r.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    Rational s(sn, sd);
    s.canonicalize();
    return s;
  }
  return std::nullopt;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

// -1 / 0 / +1 for |lambda| vs the cut radius, exact whenever both sides allow.
int compare_with_cut(const Eigenvalue& lambda, const RSelection& cut) {
  if (lambda.exact && cut.exact) {
    Rational a = abs_value(lambda.rat);
    if (a > *cut.exact) return 1;
    if (a < *cut.exact) return -1;
    return 0;
  }
  if (lambda.exact && cut.exact_square) {
    Rational a2 = abs_value(lambda.rat) * abs_value(lambda.rat);
    if (a2 > *cut.exact_square) return 1;
    if (a2 < *cut.exact_square) return -1;
    return 0;
  }
  double m = lambda.modulus();
  double tol = kModTol * std::max(1.0, cut.value);
  if (m > cut.value + tol) return 1;
  if (m < cut.value - tol) return -1;
  return 0;
}

double factorial(int k) {
  double f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Least-squares intercept of v against powers of 1/L (L = log N per scale).
std::complex<double> fit_intercept(const std::vector<double>& ls,
                                   const std::vector<std::complex<double>>& vs, int degree) {
  int n = static_cast<int>(ls.size());
  int p = degree + 1;
  std::vector<std::vector<double>> x(n, std::vector<double>(p));
  for (int i = 0; i < n; ++i) {
    double b = 1.0;
    for (int j = 0; j < p; ++j) {
      x[i][j] = b;
      b /= ls[i];
    }
  }
  // Normal equations, solved twice (real and imaginary right-hand sides).
  std::vector<std::vector<double>> a(p, std::vector<double>(p, 0.0));
  std::vector<double> br(p, 0.0), bi(p, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < p; ++j) {
      for (int l = 0; l < p; ++l) a[j][l] += x[i][j] * x[i][l];
      br[j] += x[i][j] * vs[i].real();
      bi[j] += x[i][j] * vs[i].imag();
    }
  }
  auto solve = [&](std::vector<double> rhs) {
    auto mat = a;
    for (int col = 0; col < p; ++col) {
      int piv = col;
      for (int i = col + 1; i < p; ++i) {
        if (std::abs(mat[i][col]) > std::abs(mat[piv][col])) piv = i;
      }
      std::swap(mat[piv], mat[col]);
      std::swap(rhs[piv], rhs[col]);
      for (int i = col + 1; i < p; ++i) {
        double f = mat[i][col] / mat[col][col];
        for (int j = col; j < p; ++j) mat[i][j] -= f * mat[col][j];
        rhs[i] -= f * rhs[col];
      }
    }
    for (int i = p - 1; i >= 0; --i) {
      for (int j = i + 1; j < p; ++j) rhs[i] -= mat[i][j] * rhs[j];
      rhs[i] /= mat[i][i];
    }
    return rhs;
  };
  auto sr = solve(br);
  auto si = solve(bi);
  return {sr[0], si[0]};
}

}  // namespace

RSelection choose_R(const JsrResult& rho, const GrowthAssessment& growth,
                    const EigenStructure& spectrum, int q) {
  double rho_val;
  std::optional<Rational> rho_rat;
  if (rho.exact && rho.exact_value) {
    rho_rat = *rho.exact_value;
    rho_val = rho_rat->get_d();
  } else if (rho.exact) {
    rho_val = rho.upper;
  } else {
    for (const auto& e : spectrum.entries) {
      double m = e.value.modulus();
      double tol = kModTol * std::max(1.0, m);
      if (m >= rho.lower - tol && m <= rho.upper + tol) {
        throw InconclusiveJsr("inconclusive JSR: interval [" + fmt(rho.lower) + ", " + fmt(rho.upper) +
                              "] straddles eigenvalue modulus " + fmt(m));
      }
    }
    rho_val = rho.upper;
  }

  RSelection out;
  if (growth.holds) {
    out.value = rho_val;
    out.epsilon = false;
    out.exact = rho_rat;
    out.policy = "R = rho(A); simple growth criterion holds";
    return out;
  }

  // Smallest eigenvalue modulus strictly above rho.
  bool have_next = false;
  double next_mod = 0;
  std::optional<Rational> next_rat;
  for (const auto& e : spectrum.entries) {
    bool above;
    if (rho_rat && e.value.exact) {
      above = abs_value(e.value.rat) > *rho_rat;
    } else {
      above = e.value.modulus() > rho_val + kModTol * std::max(1.0, rho_val);
    }
    if (!above) continue;
    double m = e.value.modulus();
    if (!have_next || m < next_mod - kModTol * std::max(1.0, m)) {
      have_next = true;
      next_mod = m;
      next_rat = e.value.exact ? std::optional<Rational>(abs_value(e.value.rat)) : std::nullopt;
    } else if (std::abs(m - next_mod) <= kModTol * std::max(1.0, m) && !next_rat && e.value.exact) {
      next_rat = abs_value(e.value.rat);
    }
  }

  out.epsilon = true;
  if (!have_next) {
    out.value = rho_val * std::pow(static_cast<double>(q), 0.01);
    out.policy = "R = rho(A) * q^(1/100); no eigenvalue modulus above rho(A)";
    return out;
  }
  out.value = std::sqrt(rho_val * next_mod);
  if (rho_rat && next_rat) {
    Rational r2 = (*rho_rat) * (*next_rat);
    if (auto rt = exact_sqrt(r2)) {
      out.exact = rt;
      out.value = rt->get_d();
    }
    out.exact_square = r2;
  }
  out.policy = "R = sqrt(rho(A) * m); geometric mean with the next eigenvalue modulus m = " + fmt(next_mod);
  return out;
}

AsymptoticExpansion expansion(const LinearRep& rep, int product_length) {
  require_valid(rep);
  AsymptoticExpansion out;
  out.q = rep.q;
  SummationMatrices sums = summation_matrices(rep);
  out.c_matrix = sums.c;
  out.spectrum = eigenvalues(sums.c);
  out.rho = joint_spectral_radius(rep.matrices, product_length);
  out.growth = simple_growth_check(rep.matrices);
  out.cut = choose_R(out.rho, out.growth, out.spectrum, rep.q);
  out.notes.push_back("growth check: " + out.growth.reason);
  out.notes.push_back("cut policy: " + out.cut.policy);

  const double lnq = std::log(static_cast<double>(rep.q));
  int kappa = 0;
  bool kappa_attained = false;
  bool all_above = true;
  for (const auto& e : out.spectrum.entries) {
    int cmp = compare_with_cut(e.value, out.cut);
    if (cmp > 0) {
      for (int k = e.jordan_index - 1; k >= 0; --k) {
        ExpansionTerm t;
        t.lambda = e.value;
        t.log_power = k;
        std::complex<double> lam = e.value.approx;
        t.exponent = std::log(lam) / lnq;
        if (e.value.exact && e.value.rat > 0) {
          if (auto j = exact_log(e.value.rat, rep.q)) t.exact_exponent = Rational(*j);
        }
        out.terms.push_back(std::move(t));
      }
    } else {
      all_above = false;
      if (cmp == 0) {
        kappa = std::max(kappa, e.jordan_index);
        kappa_attained = true;
      }
    }
  }

  out.error.omitted = all_above;
  out.error.epsilon = out.cut.epsilon;
  out.error.log_power = kappa;
  out.error.kappa_empty_convention = !kappa_attained;
  if (!kappa_attained) {
    out.notes.push_back("kappa: no eigenvalue modulus equals R; empty max taken as 0");
  }
  if (out.cut.value > 0) {
    out.error.exponent = std::log(out.cut.value) / lnq;
  } else {
    out.error.exponent = -std::numeric_limits<double>::infinity();
    out.notes.push_back("R = 0: all long digit products vanish, the remainder is eventually zero");
  }
  out.error.base = out.cut.exact;
  out.error.base_square = out.cut.exact_square;
  if (out.cut.exact) {
    if (auto j = exact_log(*out.cut.exact, rep.q)) out.error.exact_exponent = Rational(*j);
  } else if (out.cut.exact_square) {
    if (auto j = exact_log(*out.cut.exact_square, rep.q)) {
      out.error.exact_exponent = Rational(*j) / 2;
    }
  } else if (out.cut.epsilon && out.rho.exact_value) {
    out.error.base = out.rho.exact_value;
    if (auto j = exact_log(*out.rho.exact_value, rep.q)) {
      out.error.exact_exponent = Rational(*j) + Rational(1, 100);
    }
  }
  return out;
}

SmoothingResult minimal_smoothing_order(const LinearRep& rep, int max_order, int product_length) {
  SummationMatrices sums = summation_matrices(rep);
  if (sums.c.is_zero()) throw HypothesisViolation("theorem hypothesis violated: C=0");
  SpectralRadius r = spectral_radius(sums.c);
  if (r.value == 0.0) throw HypothesisViolation("nilpotent C: no finite order");

  for (int k = 1; k <= max_order; ++k) {
    LinearRep analyzed = (k == 1) ? rep : iterated_summatory_rep(rep, k - 1).rep;
    AsymptoticExpansion e = expansion(analyzed, product_length);
    if (!e.terms.empty()) {
      SmoothingResult out;
      out.order = k;
      out.c_radius = r;
      std::ostringstream os;
      os << "order " << k << ": q^(k-1)*r = " << fmt(std::pow(rep.q, k - 1) * r.value)
         << " exceeds the analyzed family bound rho = " << fmt(e.rho.upper)
         << "; first kept eigenvalue modulus " << fmt(e.terms.front().lambda.modulus());
      out.witness = os.str();
      out.found = std::move(e);
      return out;
    }
  }
  throw std::runtime_error("no smoothing order found up to " + std::to_string(max_order));
}

FluctuationEstimate sample_fluctuation(const LinearRep& rep, const AsymptoticExpansion& exp,
                                       std::size_t term_index, int grid_size,
                                       const std::vector<int>& m_list,
                                       const std::vector<FluctuationEstimate>& previous) {
  if (term_index >= exp.terms.size()) throw std::invalid_argument("term index out of range");
  if (previous.size() < term_index) {
    throw std::invalid_argument("dominating terms must be estimated first");
  }
  if (grid_size < 1) throw std::invalid_argument("grid size must be positive");
  if (m_list.empty()) throw std::invalid_argument("scale list must be non-empty");
  std::vector<int> scales = m_list;
  std::sort(scales.begin(), scales.end());
  scales.erase(std::unique(scales.begin(), scales.end()), scales.end());
  for (std::size_t t = 0; t < term_index; ++t) {
    if (previous[t].grid_size != grid_size || previous[t].scales != scales) {
      throw std::invalid_argument("previous estimates use a different grid or scale list");
    }
  }

  const auto& term = exp.terms[term_index];
  FluctuationEstimate out;
  out.lambda = term.lambda;
  out.log_power = term.log_power;
  out.grid_size = grid_size;
  out.scales = scales;

  LinearRep srep = summatory_rep(rep);
  const double kfac = factorial(term.log_power);

  std::vector<std::vector<std::complex<double>>> rows(grid_size);
  std::vector<std::vector<double>> logs(grid_size);
  for (int j = 0; j < grid_size; ++j) {
    double u = static_cast<double>(j) / grid_size;
    for (int m : scales) {
      auto n = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(rep.q), m + u)));
      if (n < 1) n = 1;
      double big_l = std::log(static_cast<double>(n));
      std::complex<double> val(evaluate(srep, n).get_d(), 0.0);
      for (std::size_t t = 0; t < term_index; ++t) {
        const auto& dom = exp.terms[t];
        std::complex<double> contrib = previous[t].limit[j] *
                                       std::exp(dom.exponent * big_l) *
                                       std::pow(big_l, dom.log_power) / factorial(dom.log_power);
        val -= contrib;
      }
      val *= std::exp(-term.exponent * big_l) * kfac / std::pow(big_l, term.log_power);
      out.samples.push_back({u, m, val});
      rows[j].push_back(val);
      logs[j].push_back(big_l);
    }
  }

  // A point is diverging when its last inter-scale gap clearly grows.  The
  // floor keeps round-off jitter near zeros of the fluctuation from counting.
  if (scales.size() >= 3) {
    int diverging = 0;
    for (int j = 0; j < grid_size; ++j) {
      std::size_t n = rows[j].size();
      double g_last = std::abs(rows[j][n - 1] - rows[j][n - 2]);
      double g_prev = std::abs(rows[j][n - 2] - rows[j][n - 3]);
      double floor = 1e-6 * std::max(1.0, std::abs(rows[j][n - 1]));
      if (g_last > 1.25 * g_prev && g_last > floor) ++diverging;
    }
    if (5 * diverging > grid_size) {
      throw NonConvergent("non-convergent fluctuation sampling: successive-scale gaps grow at " +
                          std::to_string(diverging) + " of " + std::to_string(grid_size) +
                          " grid points");
    }
  }

  out.limit.resize(grid_size);
  for (int j = 0; j < grid_size; ++j) {
    if (term.log_power == 0 || scales.size() < 2) {
      out.limit[j] = rows[j].back();
    } else {
      int degree = std::min<int>(term.log_power, static_cast<int>(scales.size()) - 1);
      out.limit[j] = fit_intercept(logs[j], rows[j], degree);
    }
  }

  double peak = 0;
  for (const auto& l : out.limit) peak = std::max(peak, std::abs(l));
  if (peak < 1e-8) {
    out.warnings.push_back("fluctuation is empirically ~0; the term may vanish identically");
  }
  return out;
}

std::vector<FluctuationEstimate> estimate_fluctuations(const LinearRep& rep,
                                                       const AsymptoticExpansion& exp,
                                                       std::size_t last_term, int grid_size,
                                                       std::vector<int> m_list) {
  std::vector<FluctuationEstimate> acc;
  for (std::size_t t = 0; t <= last_term && t < exp.terms.size(); ++t) {
    acc.push_back(sample_fluctuation(rep, exp, t, grid_size, m_list, acc));
  }
  return acc;
}

std::vector<FourierCoefficient> fourier_coefficients(const FluctuationEstimate& est, int max_index) {
  if (max_index < 0) throw std::invalid_argument("max index must be non-negative");
  if (est.grid_size < 4 * max_index + 4) {
    throw std::invalid_argument("grid size " + std::to_string(est.grid_size) +
                                " too small for Fourier index " + std::to_string(max_index) +
                                "; need at least " + std::to_string(4 * max_index + 4));
  }
  if (est.scales.size() < 2) throw std::invalid_argument("need samples at two scales for the gap");
  int g = est.grid_size;
  int ns = static_cast<int>(est.scales.size());
  auto row = [&](int scale_pos) {
    std::vector<std::complex<double>> r(g);
    for (int j = 0; j < g; ++j) r[j] = est.samples[static_cast<size_t>(j) * ns + scale_pos].value;
    return r;
  };
  auto last = row(ns - 1);
  auto prev = row(ns - 2);
  std::vector<FourierCoefficient> out;
  for (int idx = -max_index; idx <= max_index; ++idx) {
    std::complex<double> c(0, 0), cp(0, 0);
    for (int j = 0; j < g; ++j) {
      double ang = -2.0 * M_PI * idx * j / g;
      std::complex<double> ph(std::cos(ang), std::sin(ang));
      c += last[j] * ph;
      cp += prev[j] * ph;
    }
    c /= g;
    cp /= g;
    out.push_back({idx, c, std::abs(c - cp)});
  }
  return out;
}

}  // namespace regseq
