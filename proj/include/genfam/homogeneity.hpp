#pragma once

#include <random>

#include "genfam/bundle.hpp"
#include "genfam/family.hpp"

namespace genfam {

// Multiplicative R+ action on a coordinate space. The optional analytic
// Jacobian (of x -> map(k, x)) makes cotangent lifts exact; without it a
// central difference is used.
struct ScalingAction {
  int dim = 0;
  std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)> map;
  std::function<Eigen::MatrixXd(double, const Eigen::VectorXd&)> jacobian;

  Eigen::VectorXd apply(double k, const Eigen::VectorXd& x) const;
  Eigen::MatrixXd jac(double k, const Eigen::VectorXd& x, const SolverConfig& cfg) const;

  static ScalingAction trivial(int dim);
  // (q, v) -> (q, kv) on 2n coordinates.
  static ScalingAction tangent_scaling(int n);
  static ScalingAction custom(int dim,
                              std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)> map);
  static ScalingAction product(const ScalingAction& a, const ScalingAction& b);
};

// Lift of a base action to the cotangent bundle of its space:
// mubar(k, f) = k T*mu(k^-1, f). Coordinates of f are [x (dim); a (dim)].
Eigen::VectorXd lifted_cotangent_action(const ScalingAction& mu, double k,
                                        const Eigen::VectorXd& f, const SolverConfig& cfg = {});

// Fiber scaling on TT*Q computed by conjugating the lifted tangent-scaling
// action with alpha_Q. Equals (q, p, k qdot, k pdot).
TTStarQPoint hat_kappa(double k, const TTStarQPoint& w, const SolverConfig& cfg = {});

struct HomogeneityReport {
  int samples = 0;
  int domain_failures = 0;
  int membership_failures = 0;
  double max_residual = 0.0;

  bool passed(double tol) const {
    return domain_failures == 0 && membership_failures == 0 && max_residual <= tol;
  }
};

// max relative residual of F(action(k, r)) - k F(r) over samples x ks.
HomogeneityReport check_family_homogeneous(const FamilyOfFunctions& fam,
                                           const ScalingAction& action,
                                           const std::vector<Eigen::VectorXd>& samples,
                                           const std::vector<double>& ks);

// Images of critical points under the action stay critical.
HomogeneityReport check_critical_set_homogeneous(const FamilyOfFunctions& fam,
                                                 const ScalingAction& action,
                                                 const std::vector<Eigen::VectorXd>& critical_points,
                                                 const std::vector<double>& ks,
                                                 const SolverConfig& cfg = {});

// Images of set members (per the given oracle) stay members.
HomogeneityReport check_set_homogeneous(
    const std::function<bool(const Eigen::VectorXd&)>& member, const ScalingAction& action,
    const std::vector<Eigen::VectorXd>& samples, const std::vector<double>& ks);

std::vector<double> log_uniform_scales(int count, double lo, double hi, std::mt19937_64& rng);

}  // namespace genfam
