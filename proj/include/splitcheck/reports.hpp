#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "splitcheck/harness.hpp"

namespace splitcheck::harness {

// JSON objects mirror the C++ field names. ErrorReport carries exactly
// measured_error_norm, duhamel_norm, bound_value, sign_factor, discrepancy.
nlohmann::json to_json(const duhamel::ErrorReport& r);
nlohmann::json to_json(const StudyResult& r);
nlohmann::json to_json(const DuhamelCampaign& c);
nlohmann::json to_json(const BoundCampaign& c);
nlohmann::json to_json(const AlgebraReport& r);

duhamel::ErrorReport error_report_from_json(const nlohmann::json& j);

// CSV with a header row; doubles printed with 17 significant digits.
std::string convergence_csv(const std::vector<StudyResult>& results);
std::string schrodinger_csv(const StudyResult& result);
std::string to_csv(const DuhamelCampaign& c);
std::string to_csv(const BoundCampaign& c);

// Human-readable certification report; failing steps include the offending
// element in the deterministic FreeElement text form.
std::string to_text(const AlgebraReport& r);

}  // namespace splitcheck::harness
