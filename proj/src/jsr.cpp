#include "regseq/jsr.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace regseq {

namespace {

struct TarjanState {
  const std::vector<std::vector<int>>* adj;
  std::vector<int> index, low, comp;
  std::vector<bool> on_stack;
  std::vector<int> stack;
  int next_index = 0;
  int comp_count = 0;
};

void tarjan_visit(TarjanState& st, int v) {
  st.index[v] = st.low[v] = st.next_index++;
  st.stack.push_back(v);
  st.on_stack[v] = true;
  for (int w : (*st.adj)[v]) {
    if (st.index[w] < 0) {
      tarjan_visit(st, w);
      st.low[v] = std::min(st.low[v], st.low[w]);
    } else if (st.on_stack[w]) {
      st.low[v] = std::min(st.low[v], st.index[w]);
    }
  }
  if (st.low[v] == st.index[v]) {
    while (true) {
      int w = st.stack.back();
      st.stack.pop_back();
      st.on_stack[w] = false;
      st.comp[w] = st.comp_count;
      if (w == v) break;
    }
    st.comp_count++;
  }
}

std::string coord_list(const std::vector<int>& coords) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ",";
    os << coords[i];
  }
  os << "}";
  return os.str();
}

using DMatrix = std::vector<double>;  // row-major s*s

double dmat_inf_norm(const DMatrix& m, int s) {
  double best = 0;
  for (int i = 0; i < s; ++i) {
    double row = 0;
    for (int j = 0; j < s; ++j) row += std::abs(m[static_cast<size_t>(i) * s + j]);
    best = std::max(best, row);
  }
  return best;
}

DMatrix dmat_mul(const DMatrix& a, const DMatrix& b, int s) {
  DMatrix r(static_cast<size_t>(s) * s, 0.0);
  for (int i = 0; i < s; ++i) {
    for (int k = 0; k < s; ++k) {
      double aik = a[static_cast<size_t>(i) * s + k];
      if (aik == 0.0) continue;
      for (int j = 0; j < s; ++j) r[static_cast<size_t>(i) * s + j] += aik * b[static_cast<size_t>(k) * s + j];
    }
  }
  return r;
}

double dmat_spectral_radius(const DMatrix& m, int s) {
  // Double-precision characteristic polynomial; block sizes here are tiny.
  std::vector<double> c(static_cast<size_t>(s) + 1, 0.0);
  c[s] = 1.0;
  DMatrix mk = m;
  for (int k = 1; k <= s; ++k) {
    if (k > 1) {
      DMatrix shifted = mk;
      for (int i = 0; i < s; ++i) shifted[static_cast<size_t>(i) * s + i] += c[s - k + 1];
      mk = dmat_mul(m, shifted, s);
    }
    double tr = 0;
    for (int i = 0; i < s; ++i) tr += mk[static_cast<size_t>(i) * s + i];
    c[s - k] = -tr / k;
  }
  c.pop_back();
  double best = 0;
  for (const auto& z : poly_roots(c)) best = std::max(best, std::abs(z));
  return best;
}

struct BlockBound {
  double lower = 0, upper = 0;
  bool exact = false;
  std::optional<Rational> rat;
  std::string desc;
};

}  // namespace

SccStructure scc_block_structure(const std::vector<RatMatrix>& family) {
  if (family.empty()) throw std::invalid_argument("empty matrix family");
  int n = family[0].rows();
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (const auto& m : family) {
        if (m.at(i, j) != 0) {
          adj[i].push_back(j);
          break;
        }
      }
    }
  }

  TarjanState st;
  st.adj = &adj;
  st.index.assign(n, -1);
  st.low.assign(n, 0);
  st.comp.assign(n, -1);
  st.on_stack.assign(n, false);
  for (int v = 0; v < n; ++v) {
    if (st.index[v] < 0) tarjan_visit(st, v);
  }

  // Tarjan finishes sinks first; reversing component ids gives a topological
  // order, which makes the permuted family block upper triangular.
  int nc = st.comp_count;
  std::vector<std::vector<int>> members(nc);
  for (int v = 0; v < n; ++v) members[nc - 1 - st.comp[v]].push_back(v);

  SccStructure out;
  out.all_singletons = true;
  int pos = 0;
  for (const auto& grp : members) {
    out.blocks.emplace_back(pos, pos + static_cast<int>(grp.size()));
    if (grp.size() > 1) out.all_singletons = false;
    for (int v : grp) {
      out.perm.push_back(v);
      ++pos;
    }
  }
  return out;
}

JsrResult joint_spectral_radius(const std::vector<RatMatrix>& family, int product_length) {
  if (family.empty()) throw std::invalid_argument("empty matrix family");
  if (product_length < 1) throw std::invalid_argument("product length must be at least 1");
  SccStructure scc = scc_block_structure(family);
  int q = static_cast<int>(family.size());

  std::vector<BlockBound> bounds;
  for (const auto& [b, e] : scc.blocks) {
    int s = e - b;
    std::vector<int> coords(scc.perm.begin() + b, scc.perm.begin() + e);
    BlockBound bb;
    if (s == 1) {
      Rational best(0);
      for (const auto& m : family) best = std::max(best, abs_value(m.at(coords[0], coords[0])));
      bb.exact = true;
      bb.rat = best;
      bb.lower = bb.upper = best.get_d();
      bb.desc = "coordinate " + std::to_string(coords[0]) + ": max |diagonal entry| = " + to_string(best);
    } else {
      std::vector<RatMatrix> sub;
      for (const auto& m : family) {
        RatMatrix sm(s, s);
        for (int i = 0; i < s; ++i) {
          for (int j = 0; j < s; ++j) sm.at(i, j) = m.at(coords[i], coords[j]);
        }
        sub.push_back(std::move(sm));
      }
      bool all_same = true;
      for (int r = 1; r < q; ++r) {
        if (!(sub[r] == sub[0])) {
          all_same = false;
          break;
        }
      }
      if (all_same) {
        SpectralRadius sr = spectral_radius(sub[0]);
        bb.exact = sr.exact;
        if (sr.exact) bb.rat = sr.exact_value;
        bb.lower = bb.upper = sr.value;
        bb.desc = "block " + coord_list(coords) + ": all members equal, spectral radius of the common matrix";
      } else {
        std::vector<DMatrix> dsub;
        for (const auto& sm : sub) {
          DMatrix dm(static_cast<size_t>(s) * s);
          for (int i = 0; i < s; ++i) {
            for (int j = 0; j < s; ++j) dm[static_cast<size_t>(i) * s + j] = sm.at(i, j).get_d();
          }
          dsub.push_back(std::move(dm));
        }
        double lower = 0, upper = 0;
        std::function<void(const DMatrix&, int)> dfs = [&](const DMatrix& prod, int len) {
          double norm_root = std::pow(dmat_inf_norm(prod, s), 1.0 / len);
          if (len == product_length) upper = std::max(upper, norm_root);
          // rho(P) <= ||P||, so skip the eigenvalue solve when it cannot win.
          if (norm_root > lower) {
            lower = std::max(lower, std::pow(dmat_spectral_radius(prod, s), 1.0 / len));
          }
          if (len == product_length) return;
          for (int r = 0; r < q; ++r) dfs(dmat_mul(prod, dsub[r], s), len + 1);
        };
        for (int r = 0; r < q; ++r) dfs(dsub[r], 1);
        bb.lower = lower;
        bb.upper = upper;
        bb.exact = (upper - lower) <= 1e-12 * std::max(1.0, upper);
        std::ostringstream os;
        os << "block " << coord_list(coords) << ": product bounds [" << lower << ", " << upper
           << "] at length " << product_length;
        bb.desc = os.str();
      }
    }
    bounds.push_back(std::move(bb));
  }

  JsrResult out;
  size_t arg = 0;
  for (size_t i = 0; i < bounds.size(); ++i) {
    out.lower = std::max(out.lower, bounds[i].lower);
    if (bounds[i].upper > out.upper) {
      out.upper = bounds[i].upper;
      arg = i;
    }
  }
  out.exact = (out.upper - out.lower) <= 1e-12 * std::max(1.0, out.upper);
  if (out.exact) {
    std::optional<Rational> best;
    for (const auto& bb : bounds) {
      if (bb.rat && (!best || *bb.rat > *best)) best = bb.rat;
    }
    if (best && best->get_d() >= out.upper - 1e-12 * std::max(1.0, out.upper)) {
      out.exact_value = best;
      out.lower = out.upper = best->get_d();
    }
  }
  out.witness = bounds[arg].desc;
  return out;
}

GrowthAssessment simple_growth_check(const std::vector<RatMatrix>& family) {
  SccStructure scc = scc_block_structure(family);
  GrowthAssessment out;
  if (!scc.all_singletons) {
    for (const auto& [b, e] : scc.blocks) {
      if (e - b > 1) {
        std::vector<int> coords(scc.perm.begin() + b, scc.perm.begin() + e);
        out.holds = false;
        out.reason = "strongly connected block " + coord_list(coords) +
                     " has size > 1; the triangular diagonal criterion does not apply";
        return out;
      }
    }
  }
  int n = family[0].rows();
  std::vector<Rational> diag_max(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    for (const auto& m : family) diag_max[i] = std::max(diag_max[i], abs_value(m.at(i, i)));
  }
  Rational rho(0);
  for (const auto& v : diag_max) rho = std::max(rho, v);
  if (rho == 0) {
    out.holds = true;
    out.reason = "all diagonal entries vanish; long products are exactly zero";
    return out;
  }
  std::vector<int> attain;
  for (int i = 0; i < n; ++i) {
    if (diag_max[i] == rho) attain.push_back(i);
  }
  if (attain.size() == 1) {
    out.holds = true;
    out.reason = "largest diagonal modulus " + to_string(rho) + " is attained only at coordinate " +
                 std::to_string(attain[0]);
  } else {
    out.holds = false;
    out.reason = "largest diagonal modulus " + to_string(rho) + " is attained at coordinates " +
                 coord_list(attain) + "; polynomial factors in the growth cannot be ruled out";
  }
  return out;
}

}  // namespace regseq
