#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace genfam {

struct RunConfig {
  std::string suite = "all";
  int dim = 4;
  double mass = 1.0;
  int samples = 100;
  double tol = 0.0;  // 0 = per-check defaults
  std::uint64_t seed = 12345;
  std::string out;  // empty = stdout
  std::string format = "json";
};

struct Check {
  std::string id;
  std::string anchor;  // short statement of the verified property
  int samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::vector<double> witness;  // worst failing coordinates, empty when passing
};

struct VerificationReport {
  RunConfig config;
  std::vector<Check> checks;

  int passed() const;
  int failed() const;
  bool all_passed() const { return failed() == 0; }
};

std::string report_to_json(const VerificationReport& rep);
std::string report_to_csv(const VerificationReport& rep);
std::string csv_field(const std::string& s);

}  // namespace genfam
