#pragma once

#include "genfam/homogeneity.hpp"
#include "genfam/relativity.hpp"
#include "genfam/report.hpp"

namespace genfam {

// Runs the selected verification suite (all | bundles | families | legendre |
// homogeneity | particle | optics). Checks carry pinned default tolerances;
// cfg.tol > 0 overrides all of them. Deterministic for a fixed seed.
// Throws std::invalid_argument on an unknown suite name.
VerificationReport run_verify(const RunConfig& cfg);

// Dynamics-set samples (members of D with their closed-form residuals),
// rendered in cfg.format. model: "particle" | "optics".
std::string run_sample(const RunConfig& cfg, const std::string& model, int count);

// CSV trajectory (step index, q coords, p coords). Propagates
// std::invalid_argument from the trajectory builders for off-constraint
// initial data.
std::string run_trajectory(const RunConfig& cfg, const std::string& model,
                           const Eigen::VectorXd& q0, const Eigen::VectorXd& p0, int steps,
                           double step_size);

}  // namespace genfam
