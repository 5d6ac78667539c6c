#include "regseq/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace regseq {

nlohmann::json decimal_json(double x) {
  if (!std::isfinite(x)) {
    if (std::isnan(x)) return "nan";
    return x > 0 ? "inf" : "-inf";
  }
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return nlohmann::json(std::strtod(buf, nullptr));
}

nlohmann::json rational_json(const Rational& r) {
  return {{"exact", to_string(r)}, {"decimal", decimal_json(r.get_d())}};
}

nlohmann::json eigenvalue_json(const Eigenvalue& e) {
  nlohmann::json j;
  j["exact"] = e.exact;
  if (e.exact) {
    j["value"] = to_string(e.rat);
    j["decimal"] = decimal_json(e.rat.get_d());
  } else {
    j["decimal_re"] = decimal_json(e.approx.real());
    j["decimal_im"] = decimal_json(e.approx.imag());
  }
  return j;
}

nlohmann::json jsr_json(const JsrResult& r) {
  nlohmann::json j;
  j["lower"] = decimal_json(r.lower);
  j["upper"] = decimal_json(r.upper);
  j["exact"] = r.exact;
  if (r.exact_value) j["value"] = rational_json(*r.exact_value);
  j["witness"] = r.witness;
  return j;
}

nlohmann::json growth_json(const GrowthAssessment& g) {
  return {{"holds", g.holds}, {"reason", g.reason}};
}

nlohmann::json cut_json(const RSelection& c) {
  nlohmann::json j;
  j["value"] = decimal_json(c.value);
  j["epsilon"] = c.epsilon;
  if (c.exact) j["exact"] = to_string(*c.exact);
  if (c.exact_square) j["exact_square"] = to_string(*c.exact_square);
  j["policy"] = c.policy;
  return j;
}

nlohmann::json term_json(const ExpansionTerm& t, int q) {
  nlohmann::json j;
  j["lambda"] = eigenvalue_json(t.lambda);
  j["log_power"] = t.log_power;
  nlohmann::json ex;
  ex["decimal_re"] = decimal_json(t.exponent.real());
  ex["decimal_im"] = decimal_json(t.exponent.imag());
  if (t.exact_exponent) {
    ex["exact"] = to_string(*t.exact_exponent);
  } else if (t.lambda.exact && t.lambda.rat > 0) {
    ex["symbolic"] = "log" + std::to_string(q) + "(" + to_string(t.lambda.rat) + ")";
  }
  j["exponent"] = ex;
  return j;
}

nlohmann::json error_json(const ErrorTerm& e, int q) {
  nlohmann::json j;
  j["omitted"] = e.omitted;
  j["epsilon"] = e.epsilon;
  j["log_power"] = e.log_power;
  j["kappa_from_empty_set"] = e.kappa_empty_convention;
  nlohmann::json ex;
  ex["decimal"] = decimal_json(e.exponent);
  if (e.exact_exponent) ex["exact"] = to_string(*e.exact_exponent);
  if (e.base && !e.epsilon) {
    ex["symbolic"] = "log" + std::to_string(q) + "(" + to_string(*e.base) + ")";
  } else if (e.base && e.epsilon && !e.base_square) {
    ex["symbolic"] = "log" + std::to_string(q) + "(" + to_string(*e.base) + ") + 1/100";
  } else if (e.base_square) {
    ex["symbolic"] = "log" + std::to_string(q) + "(" + to_string(*e.base_square) + ")/2";
  }
  j["exponent"] = ex;
  return j;
}

nlohmann::json expansion_json(const AsymptoticExpansion& e) {
  nlohmann::json j;
  j["q"] = e.q;
  nlohmann::json spec = nlohmann::json::array();
  for (const auto& s : e.spectrum.entries) {
    spec.push_back({{"value", eigenvalue_json(s.value)},
                    {"multiplicity", s.multiplicity},
                    {"jordan_index", s.jordan_index},
                    {"jordan_exact", s.jordan_exact}});
  }
  j["spectrum"] = spec;
  j["jsr"] = jsr_json(e.rho);
  j["growth"] = growth_json(e.growth);
  j["cut"] = cut_json(e.cut);
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : e.terms) terms.push_back(term_json(t, e.q));
  j["terms"] = terms;
  j["error"] = error_json(e.error, e.q);
  j["notes"] = e.notes;
  return j;
}

nlohmann::json classification_json(const DandCClassification& c) {
  nlohmann::json j;
  j["case"] = case_name(c.case_tag);
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : c.main_terms) {
    terms.push_back({{"growth", rational_json(t.growth_arg)},
                     {"log_power", t.log_power},
                     {"exponent_symbolic", "log2(" + to_string(t.growth_arg) + ")"}});
  }
  j["main_terms"] = terms;
  nlohmann::json err;
  err["omitted"] = c.error_omitted;
  if (!c.error_omitted) {
    err["epsilon"] = c.error_epsilon;
    err["log_power"] = c.error_log_power;
    err["base"] = rational_json(c.error_base);
    err["exponent_symbolic"] =
        "log2(" + to_string(c.error_base) + ")" + (c.error_epsilon ? " + epsilon" : "");
  }
  j["error"] = err;
  if (c.extra_log) j["E"] = *c.extra_log;
  j["d0"] = rational_json(c.d.d0);
  j["d1"] = rational_json(c.d.d1);
  return j;
}

nlohmann::json cross_check_json(const CrossCheckReport& r) {
  nlohmann::json j;
  j["agree"] = r.agree;
  j["mismatches"] = r.mismatches;
  j["notes"] = r.notes;
  j["classification"] = classification_json(r.classification);
  j["engine"] = expansion_json(r.engine);
  j["oracle_checked"] = r.oracle_checked;
  return j;
}

nlohmann::json fluctuation_json(const FluctuationEstimate& est) {
  nlohmann::json j;
  j["lambda"] = eigenvalue_json(est.lambda);
  j["log_power"] = est.log_power;
  j["grid_size"] = est.grid_size;
  j["scales"] = est.scales;
  nlohmann::json lim = nlohmann::json::array();
  for (const auto& l : est.limit) {
    lim.push_back({{"re", decimal_json(l.real())}, {"im", decimal_json(l.imag())}});
  }
  j["limit"] = lim;
  j["warnings"] = est.warnings;
  return j;
}

nlohmann::json fourier_json(const std::vector<FourierCoefficient>& coeffs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : coeffs) {
    arr.push_back({{"index", c.index},
                   {"re", decimal_json(c.value.real())},
                   {"im", decimal_json(c.value.imag())},
                   {"gap", decimal_json(c.gap)}});
  }
  return arr;
}

nlohmann::json command_result(const std::string& status, nlohmann::json payload,
                              const std::vector<std::string>& diagnostics) {
  return {{"status", status}, {"payload", std::move(payload)}, {"diagnostics", diagnostics}};
}

}  // namespace regseq
