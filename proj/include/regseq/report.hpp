#pragma once

#include "regseq/asymptotics.hpp"
#include "regseq/dandc.hpp"

#include "json.hpp"

namespace regseq {

// JSON renderings used by the command-line tool. Exact rationals appear as
// strings; every numeric value also carries a 12-significant-digit decimal.
nlohmann::json decimal_json(double x);
nlohmann::json rational_json(const Rational& r);
nlohmann::json eigenvalue_json(const Eigenvalue& e);
nlohmann::json jsr_json(const JsrResult& r);
nlohmann::json growth_json(const GrowthAssessment& g);
nlohmann::json cut_json(const RSelection& c);
nlohmann::json term_json(const ExpansionTerm& t, int q);
nlohmann::json error_json(const ErrorTerm& e, int q);
nlohmann::json expansion_json(const AsymptoticExpansion& e);
nlohmann::json classification_json(const DandCClassification& c);
nlohmann::json cross_check_json(const CrossCheckReport& r);
nlohmann::json fluctuation_json(const FluctuationEstimate& est);
nlohmann::json fourier_json(const std::vector<FourierCoefficient>& coeffs);

nlohmann::json command_result(const std::string& status, nlohmann::json payload,
                              const std::vector<std::string>& diagnostics);

}  // namespace regseq
