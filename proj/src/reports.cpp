#include "splitcheck/reports.hpp"

#include <cstdio>
#include <sstream>

namespace splitcheck::harness {

namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

nlohmann::json to_json(const duhamel::ErrorReport& r) {
  return {{"measured_error_norm", r.measured_error_norm},
          {"duhamel_norm", r.duhamel_norm},
          {"bound_value", r.bound_value},
          {"sign_factor", r.sign_factor},
          {"discrepancy", r.discrepancy}};
}

duhamel::ErrorReport error_report_from_json(const nlohmann::json& j) {
  duhamel::ErrorReport r;
  r.measured_error_norm = j.at("measured_error_norm").get<double>();
  r.duhamel_norm = j.at("duhamel_norm").get<double>();
  r.bound_value = j.at("bound_value").get<double>();
  r.sign_factor = j.at("sign_factor").get<int>();
  r.discrepancy = j.at("discrepancy").get<double>();
  return r;
}

nlohmann::json to_json(const StudyResult& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"h", row.h}, {"error_norm", row.error}, {"norm_defect", row.norm_defect}});
  }
  nlohmann::json j = {{"problem", r.problem},
                      {"scheme", r.scheme},
                      {"seed", r.seed},
                      {"rows", rows},
                      {"fitted_order", r.fitted_order},
                      {"fit_r2", r.fit_r2},
                      {"dropped_steps", r.dropped_steps},
                      {"verdict", to_string(r.verdict)},
                      {"note", r.note}};
  j["expected_order"] = r.expected_order ? nlohmann::json(*r.expected_order) : nlohmann::json();
  if (r.reference_ratio) j["reference_ratio"] = *r.reference_ratio;
  return j;
}

nlohmann::json to_json(const DuhamelCampaign& c) {
  nlohmann::json instances = nlohmann::json::array();
  for (const auto& inst : c.instances) {
    nlohmann::json reports = nlohmann::json::array();
    const auto& v = inst.verification;
    for (std::size_t k = 0; k < v.reports.size(); ++k) {
      reports.push_back({{"t", v.times[k]}, {"error_report", to_json(v.reports[k])}});
    }
    instances.push_back({{"instance", inst.index},
                         {"constraint_residual", inst.residual},
                         {"sign_factor", v.sign_factor},
                         {"calibration_t", v.calibration_time},
                         {"sign_consistent", v.sign_consistent},
                         {"reports", reports}});
  }
  return {{"seed", c.settings.seed},
          {"count", c.settings.count},
          {"dim", c.settings.dim},
          {"times", c.settings.times},
          {"tolerance", kDuhamelTolerance},
          {"max_discrepancy", c.max_discrepancy},
          {"instances", instances},
          {"verdict", c.pass ? "PASS" : "FAIL"}};
}

nlohmann::json to_json(const BoundCampaign& c) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : c.rows) {
    rows.push_back({{"instance", r.instance},
                    {"t", r.t},
                    {"measured_error_norm", r.measured},
                    {"bound_value", r.bound},
                    {"saturation", r.saturation},
                    {"violated", r.violated}});
  }
  return {{"seed", c.settings.seed},
          {"count", c.settings.count},
          {"dim", c.settings.dim},
          {"times", c.settings.times},
          {"slack", kBoundSlack},
          {"violations", c.violations},
          {"max_saturation", c.max_saturation},
          {"rows", rows},
          {"verdict", c.pass ? "PASS" : "FAIL"}};
}

nlohmann::json to_json(const AlgebraReport& r) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : r.steps) {
    nlohmann::json js = {{"name", s.name}, {"passed", s.passed}, {"detail", s.detail}};
    if (!s.passed) js["offending"] = algebra::to_text(s.offending);
    steps.push_back(js);
  }
  return {{"steps", steps}, {"verdict", r.all_passed ? "PASS" : "FAIL"}};
}

std::string convergence_csv(const std::vector<StudyResult>& results) {
  std::ostringstream os;
  os << "problem,scheme,seed,h,error_norm,norm_defect\n";
  for (const auto& r : results) {
    for (const auto& row : r.rows) {
      os << r.problem << ',' << r.scheme << ',' << r.seed << ',' << num(row.h) << ','
         << num(row.error) << ',' << num(row.norm_defect) << '\n';
    }
  }
  return os.str();
}

std::string schrodinger_csv(const StudyResult& result) {
  std::ostringstream os;
  os << "h,L2_error,norm_defect\n";
  for (const auto& row : result.rows) {
    os << num(row.h) << ',' << num(row.error) << ',' << num(row.norm_defect) << '\n';
  }
  return os.str();
}

std::string to_csv(const DuhamelCampaign& c) {
  std::ostringstream os;
  os << "instance,t,measured_error_norm,duhamel_norm,bound_value,sign_factor,discrepancy\n";
  for (const auto& inst : c.instances) {
    const auto& v = inst.verification;
    for (std::size_t k = 0; k < v.reports.size(); ++k) {
      const auto& r = v.reports[k];
      os << inst.index << ',' << num(v.times[k]) << ',' << num(r.measured_error_norm) << ','
         << num(r.duhamel_norm) << ',' << num(r.bound_value) << ',' << r.sign_factor << ','
         << num(r.discrepancy) << '\n';
    }
  }
  return os.str();
}

std::string to_csv(const BoundCampaign& c) {
  std::ostringstream os;
  os << "instance,t,measured_error_norm,bound_value,saturation,violated\n";
  for (const auto& r : c.rows) {
    os << r.instance << ',' << num(r.t) << ',' << num(r.measured) << ',' << num(r.bound) << ','
       << num(r.saturation) << ',' << (r.violated ? 1 : 0) << '\n';
  }
  return os.str();
}

std::string to_text(const AlgebraReport& r) {
  std::ostringstream os;
  for (const auto& s : r.steps) {
    os << (s.passed ? "[ok]   " : "[FAIL] ") << s.name << " -- " << s.detail << '\n';
    if (!s.passed) {
      os << "  offending element:\n";
      std::istringstream lines(algebra::to_text(s.offending));
      for (std::string line; std::getline(lines, line);) os << "    " << line << '\n';
    }
  }
  os << (r.all_passed ? "certification: PASS\n" : "certification: FAIL\n");
  return os.str();
}

}  // namespace splitcheck::harness
