#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "genfam/numdiff.hpp"

namespace genfam {

struct SolverConfig {
  double tolerance = 1e-10;
  int max_iterations = 50;
  // Relative finite-difference steps: first derivatives, solver Jacobians,
  // second derivatives.
  double fd_step = 6.0e-6;
  double jac_step = 1.5e-8;
  double hess_step = 1.2e-4;
  double rank_threshold = 1e-8;
  int max_backtracks = 30;
};

// A family of functions on the fibres of the trivial fibration
// rho: base x fiber -> base. Total-space coordinates are [base; fiber].
// The optional constraint map carves the actual total space out of the
// coordinate product as its zero set (used by composed families, where
// fibered products impose matching conditions).
struct FamilyOfFunctions {
  int base_dim = 0;
  int fiber_dim = 0;
  std::function<bool(const Eigen::VectorXd&)> domain;  // null = everywhere
  ScalarFn value;
  VectorFn gradient;  // optional analytic gradient on total coordinates
  MatrixFn hessian;   // optional analytic Hessian
  VectorFn constraint;  // optional; zero set
  int constraint_dim = 0;

  int total_dim() const { return base_dim + fiber_dim; }
  bool in_domain(const Eigen::VectorXd& x) const { return !domain || domain(x); }
  Eigen::VectorXd grad(const Eigen::VectorXd& x, const SolverConfig& cfg) const;
  Eigen::MatrixXd hess(const Eigen::VectorXd& x, const SolverConfig& cfg) const;
  Eigen::MatrixXd constraint_jacobian(const Eigen::VectorXd& x, const SolverConfig& cfg) const;
};

struct CriticalPoint {
  Eigen::VectorXd base;
  Eigen::VectorXd fiber;
  Eigen::VectorXd multipliers;  // one per constraint row
  double residual = 0.0;

  Eigen::VectorXd total() const;
};

struct Classification {
  int rank = 0;
  bool morse_at_point = false;
};

struct MembershipResult {
  bool member = false;
  std::optional<CriticalPoint> witness;
  double best_residual = std::numeric_limits<double>::infinity();
  int seeds_tried = 0;

  explicit operator bool() const { return member; }
};

// Partial derivatives of F along the fiber coordinates.
// Throws std::domain_error if the point is outside the domain.
Eigen::VectorXd vertical_gradient(const FamilyOfFunctions& fam, const Eigen::VectorXd& total,
                                  const SolverConfig& cfg = {});

// Norm of the stationarity residual along admissible vertical directions
// (kernel of the fiber-block constraint Jacobian), together with the
// constraint violation. Equals |vertical_gradient| for unconstrained families.
double criticality_residual(const FamilyOfFunctions& fam, const Eigen::VectorXd& total,
                            const SolverConfig& cfg = {},
                            Eigen::VectorXd* multipliers_out = nullptr);

// Damped Newton on the fiberwise stationarity system at fixed base.
// Divergence or a domain exit is a no-solution result, not an error.
std::optional<CriticalPoint> solve_critical(const FamilyOfFunctions& fam,
                                            const Eigen::VectorXd& base,
                                            const Eigen::VectorXd& fiber_seed,
                                            const SolverConfig& cfg = {});

// Mixed second derivatives D_v D_w F, v over vertical directions, w over all
// tangent directions of the total space. For constrained families the Hessian
// of F + lambda^T G restricted to the corresponding tangent bases.
Eigen::MatrixXd w_matrix(const FamilyOfFunctions& fam, const CriticalPoint& cp,
                         const SolverConfig& cfg = {});

Classification classify_at(const FamilyOfFunctions& fam, const CriticalPoint& cp,
                           const SolverConfig& cfg = {});

// Base-direction derivative of F on the critical set (Lagrange-corrected when
// the family carries constraints). Throws std::logic_error off the critical set.
Eigen::VectorXd kappa_map(const FamilyOfFunctions& fam, const CriticalPoint& cp,
                          const SolverConfig& cfg = {});

// Witness search for the generated set N: is `covector` the image kappa(r) of
// some critical point r over `base`? "false" means no witness was found from
// the given seeds.
MembershipResult n_membership(const FamilyOfFunctions& fam, const Eigen::VectorXd& base,
                              const Eigen::VectorXd& covector,
                              const std::vector<Eigen::VectorXd>& seeds,
                              const SolverConfig& cfg = {});

// Same, but the covector is matched only along the given base directions
// (columns of dirs); targets[i] is the required pairing with dirs.col(i).
MembershipResult directional_membership(const FamilyOfFunctions& fam, const Eigen::VectorXd& base,
                                        const Eigen::MatrixXd& dirs, const Eigen::VectorXd& targets,
                                        const std::vector<Eigen::VectorXd>& seeds,
                                        const SolverConfig& cfg = {});

}  // namespace genfam
