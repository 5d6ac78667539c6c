#include "regseq/dandc.hpp"

#include "regseq/summation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace regseq {

namespace {

Rational two_pow(int e) { return rational_pow(Rational(2), e); }

std::string term_text(const MainTerm& t) {
  std::ostringstream os;
  os << "(growth " << to_string(t.growth_arg) << ", log power " << t.log_power << ")";
  return os.str();
}

}  // namespace

Rational DandCProblem::g_at1() const {
  if (g1) return *g1;
  Rational acc(0);
  for (const auto& c : toll) acc += c;  // polynomial at n=1
  return acc;
}

Rational DandCProblem::toll_value(std::uint64_t n) const {
  Rational acc(0);
  Rational x(static_cast<unsigned long>(n));
  for (auto it = toll.rbegin(); it != toll.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void require_valid(const DandCProblem& p) {
  if (p.alpha <= 0 || p.beta <= 0) throw std::invalid_argument("alpha and beta must be positive");
  if (p.toll.empty()) throw std::invalid_argument("toll polynomial needs at least one coefficient");
  if (p.toll.size() > 1 && p.toll.back() == 0) {
    throw std::invalid_argument("leading toll coefficient must be nonzero");
  }
}

DValues d_values(const DandCProblem& p) {
  require_valid(p);
  DValues d;
  d.d0 = (1 - p.beta) * p.x1 - p.g_at1() + p.g_at0();
  d.d1 = p.g_at1() - (1 - p.beta) * p.x1;
  return d;
}

HRep build_h_rep(const DandCProblem& p) {
  require_valid(p);
  const int k = p.degree();
  HRep out;
  out.degree = k;
  out.d = d_values(p);
  out.reduced = (out.d.d0 == 0 && out.d.d1 == 0);

  const int dim = (k >= 1 ? k + 1 : 1) + (out.reduced ? 0 : 1);
  const Rational mu[2] = {p.beta, p.alpha};
  const Rational dr[2] = {out.d.d0, out.d.d1};

  LinearRep rep;
  rep.q = 2;
  rep.dim = dim;
  rep.u.assign(dim, Rational(0));
  rep.u[0] = 1;
  rep.w.assign(dim, Rational(0));
  rep.w[0] = p.x1;
  if (k >= 1) rep.w[k] = 1;         // the n^0 coordinate of the power block
  if (!out.reduced) rep.w[dim - 1] = 1;

  for (int r = 0; r < 2; ++r) {
    RatMatrix m(dim, dim);
    m.at(0, 0) = mu[r];
    // Power block tracks (n^{k-1}, ..., n, 1); exponent i sits at row 1+(k-1-i).
    for (int j = k - 1; j >= 0; --j) {
      int col = 1 + (k - 1 - j);
      Rational b(0);
      for (int i = j + 1; i <= k; ++i) {
        Rational weight = (r == 0) ? two_pow(j) : (two_pow(i) - two_pow(j));
        b += binomial(i, j) * weight * p.toll[static_cast<size_t>(i)];
      }
      m.at(0, col) = b;
    }
    for (int i = k - 1; i >= 0; --i) {
      int row = 1 + (k - 1 - i);
      if (r == 0) {
        m.at(row, row) = two_pow(i);
      } else {
        for (int j = 0; j <= i; ++j) {
          int col = 1 + (k - 1 - j);
          m.at(row, col) = binomial(i, j) * two_pow(j);
        }
      }
    }
    if (!out.reduced) {
      m.at(0, dim - 1) = dr[r];
      m.at(dim - 1, dim - 1) = (r == 0) ? 1 : 0;
    }
    rep.matrices.push_back(std::move(m));
  }
  out.rep = std::move(rep);
  return out;
}

std::string case_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::c1a: return "1a";
    case CaseTag::c1b: return "1b";
    case CaseTag::c2: return "2";
    case CaseTag::c3: return "3";
    case CaseTag::c4: return "4";
    case CaseTag::const1: return "const-1";
    case CaseTag::const2a: return "const-2a";
    case CaseTag::const2b: return "const-2b";
  }
  return "?";
}

DandCClassification classify(const DandCProblem& p) {
  require_valid(p);
  DandCClassification out;
  out.d = d_values(p);
  const int k = p.degree();
  const Rational s = p.alpha + p.beta;
  const Rational mx = std::max(p.alpha, p.beta);

  if (k == 0) {
    if (out.d.d0 == 0 && out.d.d1 == 0) {
      out.case_tag = CaseTag::const1;
      out.main_terms.push_back({s, 0});
      out.error_omitted = true;
      out.error_base = 0;
      return out;
    }
    if (s > 1) {
      out.case_tag = CaseTag::const2a;
      out.main_terms.push_back({s, 0});
      out.error_base = std::max(mx, Rational(1));
      out.error_epsilon = (mx == 1);
      out.error_log_power = (mx < 1) ? 1 : 0;
      return out;
    }
    out.case_tag = CaseTag::const2b;
    out.error_base = 1;
    out.error_log_power = (s == 1 && out.d.d0 + out.d.d1 != 0) ? 1 : 0;
    return out;
  }

  const Rational pk = two_pow(k);
  const Rational pk1 = two_pow(k - 1);
  if (s > pk) {
    if (pk > mx) {
      out.case_tag = CaseTag::c1a;
      out.main_terms.push_back({s, 0});
      out.main_terms.push_back({pk, 0});
      out.error_base = mx;
    } else {
      out.case_tag = CaseTag::c1b;
      out.main_terms.push_back({s, 0});
      out.error_base = mx;
      out.error_log_power = (mx == pk) ? 1 : 0;
    }
  } else if (s == pk) {
    out.case_tag = CaseTag::c2;
    out.main_terms.push_back({pk, 1});
    out.main_terms.push_back({pk, 0});
    out.error_base = mx;
    out.error_epsilon = (p.alpha == p.beta);
  } else if (s > pk1) {
    out.case_tag = CaseTag::c3;
    out.main_terms.push_back({pk, 0});
    out.main_terms.push_back({s, 0});
    out.error_base = std::max(mx, pk1);
    out.error_epsilon = (mx == pk1);
    out.error_log_power = (mx < pk1) ? 1 : 0;
  } else {
    out.case_tag = CaseTag::c4;
    int e = 1;
    if (s == pk1) {
      bool bump = (k >= 2) ? (p.toll[static_cast<size_t>(k - 1)] != 0)
                           : (out.d.d0 + out.d.d1 != 0);
      if (bump) e = 2;
    }
    out.extra_log = e;
    out.main_terms.push_back({pk, 0});
    out.error_base = pk1;
    out.error_log_power = e;
  }
  return out;
}

std::vector<Rational> dandc_oracle(const DandCProblem& p, std::size_t N) {
  require_valid(p);
  std::vector<Rational> x;
  x.reserve(N);
  if (N == 0) return x;
  x.push_back(Rational(0));
  if (N == 1) return x;
  x.push_back(p.x1);
  for (std::size_t n = 2; n < N; ++n) {
    x.push_back(p.alpha * x[n / 2] + p.beta * x[(n + 1) / 2] + p.toll_value(n));
  }
  return x;
}

CrossCheckReport cross_check(const DandCProblem& p, std::size_t oracle_n) {
  CrossCheckReport rep;
  rep.classification = classify(p);
  HRep h = build_h_rep(p);
  rep.engine = expansion(h.rep);

  Rational poly_at_1 = 0;
  for (const Rational& c : p.toll) poly_at_1 += c;
  if ((p.g0 && *p.g0 != p.toll.front()) || (p.g1 && *p.g1 != poly_at_1)) {
    rep.notes.push_back("g(0)/g(1) overridden away from the polynomial; the represented sequence "
                        "differs from the plain recurrence");
  }

  // The summed difference representation must reproduce x itself.
  std::vector<Rational> oracle = dandc_oracle(p, oracle_n);
  LinearRep srep = summatory_rep(h.rep);
  std::vector<Rational> sums = evaluate_prefix(srep, oracle_n);
  std::size_t bad = 0;
  for (std::size_t n = 0; n < oracle_n; ++n) {
    if (sums[n] != oracle[n]) {
      if (++bad <= 3) {
        rep.mismatches.push_back("summed representation != recurrence at n=" + std::to_string(n) +
                                 ": " + to_string(sums[n]) + " vs " + to_string(oracle[n]));
      }
    }
  }
  if (bad > 3) {
    rep.mismatches.push_back("... " + std::to_string(bad) + " oracle mismatches in total");
  }
  rep.oracle_checked = oracle_n;

  // Main terms: multiset of (growth argument, log power).
  std::vector<MainTerm> engine_terms;
  bool engine_rational = true;
  for (const auto& t : rep.engine.terms) {
    if (!t.lambda.exact || t.lambda.rat <= 0) {
      engine_rational = false;
      rep.mismatches.push_back("engine kept a non-rational or non-positive eigenvalue term");
      break;
    }
    engine_terms.push_back({t.lambda.rat, t.log_power});
  }
  if (engine_rational) {
    auto key = [](const MainTerm& a, const MainTerm& b) {
      if (a.growth_arg != b.growth_arg) return a.growth_arg < b.growth_arg;
      return a.log_power < b.log_power;
    };
    std::vector<MainTerm> lhs = engine_terms, rhs = rep.classification.main_terms;
    std::sort(lhs.begin(), lhs.end(), key);
    std::sort(rhs.begin(), rhs.end(), key);
    bool equal = lhs.size() == rhs.size();
    for (std::size_t i = 0; equal && i < lhs.size(); ++i) {
      equal = lhs[i].growth_arg == rhs[i].growth_arg && lhs[i].log_power == rhs[i].log_power;
    }
    if (!equal) {
      std::ostringstream os;
      os << "main terms differ: engine {";
      for (const auto& t : lhs) os << term_text(t);
      os << "} vs classification {";
      for (const auto& t : rhs) os << term_text(t);
      os << "}";
      rep.mismatches.push_back(os.str());
    }
  }

  // Error term: omission must agree; exponents compared per the epsilon policy.
  if (rep.engine.error.omitted != rep.classification.error_omitted) {
    rep.mismatches.push_back(std::string("error omission differs: engine ") +
                             (rep.engine.error.omitted ? "omits" : "keeps") + ", classification " +
                             (rep.classification.error_omitted ? "omits" : "keeps"));
  } else if (!rep.engine.error.omitted) {
    bool eng_eps = rep.engine.error.epsilon;
    bool cls_eps = rep.classification.error_epsilon;
    auto engine_base = [&]() -> std::optional<Rational> {
      if (eng_eps) return rep.engine.rho.exact_value;
      return rep.engine.cut.exact;
    }();
    if (eng_eps == cls_eps) {
      if (!engine_base) {
        rep.mismatches.push_back("engine error base is not an exact rational");
      } else if (*engine_base != rep.classification.error_base) {
        rep.mismatches.push_back("error bases differ: engine " + to_string(*engine_base) +
                                 " vs classification " + to_string(rep.classification.error_base));
      }
    } else if (eng_eps && !cls_eps) {
      if (engine_base && *engine_base == rep.classification.error_base) {
        rep.notes.push_back("engine reports +epsilon (conservative growth criterion) on the same "
                            "base " + to_string(*engine_base) + "; accepted");
      } else {
        rep.mismatches.push_back("engine epsilon error with base different from classification");
      }
    } else {
      rep.mismatches.push_back("classification carries +epsilon but the engine does not");
    }
    rep.notes.push_back("error log powers (engine " + std::to_string(rep.engine.error.log_power) +
                        ", classification " + std::to_string(rep.classification.error_log_power) +
                        ") are outside the agreement contract");
  }

  rep.agree = rep.mismatches.empty();
  return rep;
}

MinmaxFixture minmax_fixture(std::size_t n_max) {
  MinmaxFixture f;
  f.rep.q = 2;
  f.rep.dim = 3;
  f.rep.u = {Rational(1), Rational(0), Rational(0)};
  f.rep.w = {Rational(0), Rational(0), Rational(1)};
  RatMatrix a0(3, 3), a1(3, 3);
  // right vector (h(n), [n=1], [n=0])
  a0.at(0, 0) = 1; a0.at(0, 1) = 1; a0.at(2, 2) = 1;
  a1.at(0, 0) = 1; a1.at(0, 2) = 1; a1.at(1, 2) = 1;
  f.rep.matrices = {a0, a1};

  f.x.assign(n_max + 1, Rational(0));
  for (std::size_t n = 2; n <= n_max; ++n) {
    if (n % 2 == 0) {
      std::size_t m = n / 2;
      f.x[n] = 2 * f.x[m] + 2 - (m == 1 ? 1 : 0) - (m == 0 ? 2 : 0);
    } else {
      std::size_t m = n / 2;
      f.x[n] = f.x[m] + f.x[m + 1] + 2 - (m == 0 ? 2 : 0);
    }
  }
  return f;
}

}  // namespace regseq
