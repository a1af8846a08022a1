#pragma once

#include <string>

#include <json.hpp>

#include "maclaurin/blowup.hpp"
#include "maclaurin/optimizer.hpp"
#include "maclaurin/oracle.hpp"
#include "maclaurin/structure.hpp"
#include "maclaurin/weights.hpp"

namespace maclaurin {

inline constexpr const char* kToolVersion = "0.1.0";

nlohmann::json to_json(const CertifiedValue& value);
nlohmann::json to_json(const Verdict& verdict);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const EqualityDiagnosis& diagnosis);
nlohmann::json to_json(const ReducedGraph& reduced);
nlohmann::json to_json(const SimplexPoint& point);
nlohmann::json to_json(const ShiftOutcome& outcome);
nlohmann::json to_json(const DescentResult& result);
nlohmann::json to_json(const OptimizationResult& result);
nlohmann::json to_json(const BlowupCheckReport& report);
nlohmann::json to_json(const SurveyRecord& record);

std::string survey_csv_header();
std::string survey_csv_line(const SurveyRecord& record);

// Uniform CLI envelope.
nlohmann::json envelope(const std::string& command, nlohmann::json inputs, nlohmann::json result);

}  // namespace maclaurin
