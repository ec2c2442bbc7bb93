#include "genfam/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace genfam {

int VerificationReport::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const Check& c) { return c.pass; }));
}

int VerificationReport::failed() const { return static_cast<int>(checks.size()) - passed(); }

std::string report_to_json(const VerificationReport& rep) {
  nlohmann::ordered_json j;
  j["config"] = {{"suite", rep.config.suite},   {"dim", rep.config.dim},
                 {"mass", rep.config.mass},     {"samples", rep.config.samples},
                 {"tol", rep.config.tol},       {"seed", rep.config.seed},
                 {"format", rep.config.format}};
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : rep.checks) {
    nlohmann::ordered_json jc = {{"id", c.id},
                                 {"anchor", c.anchor},
                                 {"samples", c.samples},
                                 {"max_residual", c.max_residual},
                                 {"tolerance", c.tolerance},
                                 {"pass", c.pass}};
    if (!c.witness.empty()) jc["witness"] = c.witness;
    j["checks"].push_back(jc);
  }
  j["summary"] = {{"total", rep.checks.size()},
                  {"passed", rep.passed()},
                  {"failed", rep.failed()}};
  return j.dump(2) + "\n";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}

std::string report_to_csv(const VerificationReport& rep) {
  std::ostringstream os;
  os << "id,anchor,samples,max_residual,tolerance,pass\r\n";
  for (const auto& c : rep.checks) {
    std::ostringstream num;
    num.precision(17);
    num << c.max_residual;
    os << csv_field(c.id) << ',' << csv_field(c.anchor) << ',' << c.samples << ',' << num.str()
       << ',' << c.tolerance << ',' << (c.pass ? "true" : "false") << "\r\n";
  }
  return os.str();
}

}  // namespace genfam
