#include "regseq/asymptotics.hpp"
#include "regseq/dandc.hpp"
#include "regseq/rep_io.hpp"
#include "regseq/report.hpp"
#include "regseq/summation.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitHypothesis = 3;

int classify_exit(const std::exception& e) {
  if (dynamic_cast<const regseq::InconclusiveJsr*>(&e)) return kExitInconclusive;
  if (dynamic_cast<const regseq::HypothesisViolation*>(&e)) return kExitHypothesis;
  return kExitError;
}

std::vector<regseq::Rational> parse_rational_list(const std::string& text) {
  std::vector<regseq::Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(regseq::parse_rational(item));
  if (out.empty()) throw std::invalid_argument("empty rational list");
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

void emit_json_result(const std::string& status, nlohmann::json payload,
                      const std::vector<std::string>& diagnostics) {
  std::cout << regseq::command_result(status, std::move(payload), diagnostics).dump(2) << "\n";
}

// Lets `--toll -1,1` work by folding the value into `--flag=value` form.
std::vector<std::string> fold_negative_values(int argc, char** argv) {
  const std::vector<std::string> value_flags = {"--toll", "--alpha", "--beta", "--x1",
                                                "--g0",   "--g1",    "--scales"};
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string cur = argv[i];
    bool folded = false;
    for (const auto& f : value_flags) {
      if (cur == f && i + 1 < argc && argv[i + 1][0] == '-' &&
          std::isdigit(static_cast<unsigned char>(argv[i + 1][1] ? argv[i + 1][1] : '\0'))) {
        args.push_back(cur + "=" + argv[i + 1]);
        ++i;
        folded = true;
        break;
      }
    }
    if (!folded) args.push_back(cur);
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linear representations of digit-driven sequences: evaluation, summation, "
               "asymptotic classification"};
  app.require_subcommand(1);

  // eval
  std::string eval_file;
  std::int64_t eval_n = -1;
  std::int64_t eval_prefix = -1;
  bool eval_json = false;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate x(n) or a prefix x(0..N-1)");
  eval_cmd->add_option("rep", eval_file, "representation JSON file")->required();
  eval_cmd->add_option("n", eval_n, "index to evaluate");
  eval_cmd->add_option("--prefix", eval_prefix, "evaluate x(0..N-1) instead");
  eval_cmd->add_flag("--json", eval_json, "wrap the values in a JSON result");

  // analyze
  std::string analyze_file;
  int analyze_len = 8;
  auto* analyze_cmd = app.add_subcommand("analyze", "asymptotic expansion of the running sum");
  analyze_cmd->add_option("rep", analyze_file, "representation JSON file")->required();
  analyze_cmd->add_option("--product-length", analyze_len, "bound-refinement product length")
      ->default_val(8);

  // dandc
  std::string dc_alpha, dc_beta, dc_toll, dc_x1 = "0", dc_g0, dc_g1, dc_emit;
  std::int64_t dc_verify = -1;
  auto* dc_cmd = app.add_subcommand("dandc", "classify a divide-and-conquer recurrence");
  dc_cmd->add_option("--alpha", dc_alpha, "coefficient of x(floor(n/2))")->required();
  dc_cmd->add_option("--beta", dc_beta, "coefficient of x(ceil(n/2))")->required();
  dc_cmd->add_option("--toll", dc_toll, "polynomial toll coefficients c0,c1,...,ck")->required();
  dc_cmd->add_option("--x1", dc_x1, "initial value x(1)");
  dc_cmd->add_option("--g0", dc_g0, "override g(0)");
  dc_cmd->add_option("--g1", dc_g1, "override g(1)");
  dc_cmd->add_option("--verify", dc_verify, "cross-check against the recurrence for n < N");
  dc_cmd->add_option("--emit-rep", dc_emit, "write the difference representation to a file");

  // fluctuation
  std::string fl_file, fl_scales = "8,12,16,20,24", fl_fourier_out = "fourier.json";
  int fl_grid = 64, fl_term = 0, fl_fourier = -1;
  auto* fl_cmd = app.add_subcommand("fluctuation", "sample the periodic fluctuation of a term");
  fl_cmd->add_option("rep", fl_file, "representation JSON file")->required();
  fl_cmd->add_option("--grid", fl_grid, "grid points per period")->default_val(64);
  fl_cmd->add_option("--scales", fl_scales, "comma-separated scale exponents m");
  fl_cmd->add_option("--term", fl_term, "term index in dominance order")->default_val(0);
  fl_cmd->add_option("--fourier", fl_fourier, "also emit Fourier coefficients up to this index");
  fl_cmd->add_option("--fourier-out", fl_fourier_out, "Fourier JSON output path");

  // smooth-order
  std::string so_file;
  auto* so_cmd = app.add_subcommand("smooth-order", "smallest summation order with explicit terms");
  so_cmd->add_option("rep", so_file, "representation JSON file")->required();

  // sum-rep
  std::string sr_file, sr_out;
  int sr_order = 1;
  auto* sr_cmd = app.add_subcommand("sum-rep", "emit the k-fold running-sum representation");
  sr_cmd->add_option("rep", sr_file, "representation JSON file")->required();
  sr_cmd->add_option("--order", sr_order, "summation order k")->default_val(1);
  sr_cmd->add_option("--out", sr_out, "output file (default: stdout)");

  auto args = fold_negative_values(argc, argv);
  std::reverse(args.begin(), args.end());  // CLI11 consumes reversed vectors
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*eval_cmd) {
      regseq::LinearRep rep = regseq::load_rep(eval_file);
      std::vector<regseq::Rational> values;
      if (eval_prefix >= 0) {
        values = regseq::evaluate_prefix(rep, static_cast<std::size_t>(eval_prefix));
      } else if (eval_n >= 0) {
        values.push_back(regseq::evaluate(rep, static_cast<std::uint64_t>(eval_n)));
      } else {
        throw std::invalid_argument("give an index n or --prefix N");
      }
      if (eval_json) {
        nlohmann::json vals = nlohmann::json::array();
        for (const auto& v : values) vals.push_back(regseq::rational_json(v));
        emit_json_result("ok", {{"values", vals}}, {});
      } else {
        for (const auto& v : values) std::cout << regseq::to_string(v) << "\n";
      }
      return kExitOk;
    }

    if (*analyze_cmd) {
      regseq::LinearRep rep = regseq::load_rep(analyze_file);
      try {
        regseq::AsymptoticExpansion exp = regseq::expansion(rep, analyze_len);
        emit_json_result("ok", regseq::expansion_json(exp), exp.notes);
      } catch (const std::exception& e) {
        emit_json_result("error", nlohmann::json::object(), {e.what()});
        std::cerr << "error: " << e.what() << "\n";
        return classify_exit(e);
      }
      return kExitOk;
    }

    if (*dc_cmd) {
      regseq::DandCProblem p;
      p.alpha = regseq::parse_rational(dc_alpha);
      p.beta = regseq::parse_rational(dc_beta);
      p.toll = parse_rational_list(dc_toll);
      p.x1 = regseq::parse_rational(dc_x1);
      if (!dc_g0.empty()) p.g0 = regseq::parse_rational(dc_g0);
      if (!dc_g1.empty()) p.g1 = regseq::parse_rational(dc_g1);

      try {
        nlohmann::json payload;
        std::vector<std::string> diagnostics;
        payload["classification"] = regseq::classification_json(regseq::classify(p));
        regseq::HRep h = regseq::build_h_rep(p);
        payload["difference_rep_dim"] = h.rep.dim;
        payload["difference_rep_reduced"] = h.reduced;
        if (!dc_emit.empty()) {
          regseq::save_rep(h.rep, dc_emit);
          payload["emitted_rep"] = dc_emit;
        }
        if (dc_verify >= 0) {
          regseq::CrossCheckReport cc = regseq::cross_check(p, static_cast<std::size_t>(dc_verify));
          payload["cross_check"] = regseq::cross_check_json(cc);
          for (const auto& m : cc.mismatches) diagnostics.push_back(m);
        }
        emit_json_result("ok", std::move(payload), diagnostics);
      } catch (const std::exception& e) {
        emit_json_result("error", nlohmann::json::object(), {e.what()});
        std::cerr << "error: " << e.what() << "\n";
        return classify_exit(e);
      }
      return kExitOk;
    }

    if (*fl_cmd) {
      regseq::LinearRep rep = regseq::load_rep(fl_file);
      regseq::AsymptoticExpansion exp = regseq::expansion(rep);
      if (exp.terms.empty()) {
        std::cerr << "error: no terms to sample\n";
        return kExitError;
      }
      if (fl_term < 0 || static_cast<std::size_t>(fl_term) >= exp.terms.size()) {
        throw std::invalid_argument("term index out of range; expansion has " +
                                    std::to_string(exp.terms.size()) + " term(s)");
      }
      auto estimates = regseq::estimate_fluctuations(rep, exp, static_cast<std::size_t>(fl_term),
                                                     fl_grid, parse_int_list(fl_scales));
      const auto& est = estimates.back();
      for (const auto& w : est.warnings) std::cerr << "warning: " << w << "\n";
      std::cout << "u,m,value_re,value_im\n";
      char buf[128];
      for (const auto& s : est.samples) {
        std::snprintf(buf, sizeof buf, "%.6f,%d,%.12g,%.12g", s.u, s.m, s.value.real(),
                      s.value.imag());
        std::cout << buf << "\n";
      }
      if (fl_fourier >= 0) {
        auto coeffs = regseq::fourier_coefficients(est, fl_fourier);
        nlohmann::json j;
        j["term"] = regseq::fluctuation_json(est);
        j["coefficients"] = regseq::fourier_json(coeffs);
        std::ofstream out(fl_fourier_out);
        if (!out) throw std::runtime_error("cannot write " + fl_fourier_out);
        out << j.dump(2) << "\n";
        std::cerr << "fourier coefficients written to " << fl_fourier_out << "\n";
      }
      return kExitOk;
    }

    if (*so_cmd) {
      regseq::LinearRep rep = regseq::load_rep(so_file);
      regseq::SmoothingResult res = regseq::minimal_smoothing_order(rep);
      std::cout << "k = " << res.order << "\n";
      std::cout << res.witness << "\n";
      return kExitOk;
    }

    if (*sr_cmd) {
      regseq::LinearRep rep = regseq::load_rep(sr_file);
      if (sr_order < 1) throw std::invalid_argument("order must be at least 1");
      regseq::LinearRep out_rep =
          sr_order == 1 ? regseq::summatory_rep(rep) : regseq::iterated_summatory_rep(rep, sr_order).rep;
      if (sr_out.empty()) {
        std::cout << regseq::rep_to_json(out_rep).dump(2) << "\n";
      } else {
        regseq::save_rep(out_rep, sr_out);
        std::cout << "written to " << sr_out << "\n";
      }
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return classify_exit(e);
  }
  return kExitError;
}
