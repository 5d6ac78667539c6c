#include "regseq/rep_io.hpp"

#include <fstream>
#include <stdexcept>

namespace regseq {

namespace {

Rational scalar_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  throw std::invalid_argument("rational entries must be strings like \"p/q\"");
}

RatVector vector_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector must be a JSON array");
  RatVector v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(scalar_from_json(e));
  return v;
}

RatMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a non-empty array of rows");
  int rows = static_cast<int>(j.size());
  int cols = static_cast<int>(j[0].size());
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols) {
      throw std::invalid_argument("matrix rows must all have the same length");
    }
    for (int c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json(j[i][c]);
  }
  return m;
}

nlohmann::json vector_to_json(const RatVector& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& e : v) j.push_back(to_string(e));
  return j;
}

nlohmann::json matrix_to_json(const RatMatrix& m) {
  nlohmann::json j = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(i, c)));
    j.push_back(row);
  }
  return j;
}

}  // namespace

LinearRep rep_from_json(const nlohmann::json& j) {
  for (const char* key : {"q", "dim", "u", "matrices", "w"}) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  }
  LinearRep rep;
  rep.q = j.at("q").get<int>();
  rep.dim = j.at("dim").get<int>();
  rep.u = vector_from_json(j.at("u"));
  if (!j.at("matrices").is_array()) throw std::invalid_argument("'matrices' must be an array");
  for (const auto& mj : j.at("matrices")) rep.matrices.push_back(matrix_from_json(mj));
  rep.w = vector_from_json(j.at("w"));
  require_valid(rep);
  return rep;
}

nlohmann::json rep_to_json(const LinearRep& rep) {
  nlohmann::json j;
  j["q"] = rep.q;
  j["dim"] = rep.dim;
  j["u"] = vector_to_json(rep.u);
  nlohmann::json mats = nlohmann::json::array();
  for (const auto& m : rep.matrices) mats.push_back(matrix_to_json(m));
  j["matrices"] = mats;
  j["w"] = vector_to_json(rep.w);
  return j;
}

LinearRep load_rep(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open representation file: " + path);
  nlohmann::json j;
  try {
    in >> j;
    return rep_from_json(j);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void save_rep(const LinearRep& rep, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write representation file: " + path);
  out << rep_to_json(rep).dump(2) << "\n";
}

}  // namespace regseq
