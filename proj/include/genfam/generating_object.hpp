#pragma once

#include <stdexcept>
#include <string>

#include "genfam/bundle.hpp"
#include "genfam/family.hpp"

namespace genfam {

enum class Side { lagrangian, hamiltonian };

// Submanifold of a coordinate space, given by a predicate and (optionally) a
// defining map whose regular zero set it is. Tangent spaces come from the
// defining map's Jacobian kernel; without a defining map the set is open and
// every direction is tangent.
struct ConstraintSet {
  int ambient_dim = 0;
  std::function<bool(const Eigen::VectorXd&)> predicate;  // null = everywhere
  VectorFn defining;  // optional
  int defining_dim = 0;
  VectorFn parametrize;  // optional sampler, params -> ambient point

  bool contains(const Eigen::VectorXd& x) const { return !predicate || predicate(x); }
  Eigen::MatrixXd tangent_basis(const Eigen::VectorXd& x, const SolverConfig& cfg = {}) const;

  static ConstraintSet open(int ambient_dim);
};

// A generating object: a side tag selecting the special symplectic structure
// (theta = d_T theta_Q on the Lagrangian side, i_T d theta_Q with -H on the
// Hamiltonian side, the (-) product form when `product` is set), a constraint
// submanifold X of the phase base, and a family over X. The family's value is
// the generating function with the side's sign convention already folded in
// (Hamiltonian-side objects store -H).
struct GeneratingObject {
  Side side = Side::lagrangian;   // product objects: side of factor 2
  bool product = false;
  Side side1 = Side::lagrangian;  // product objects only: side of factor 1
  int config_dim = 0;             // n = dim Q
  int split = 0;                  // product objects: ambient dim of the factor-2 base
  ConstraintSet constraint;
  FamilyOfFunctions family;
};

// A candidate element of the dynamics: a point of TT*Q, or a pair for
// product-side objects.
struct DynamicsCandidate {
  TTStarQPoint w2;
  std::optional<TTStarQPoint> w1;
};

// Phase-base coordinates of w under the side's projection:
// Tpi_Q(w) = (q, qdot) on the Lagrangian side, tau_{T*Q}(w) = (q, p) on the
// Hamiltonian side.
Eigen::VectorXd phase_base(Side side, const TTStarQPoint& w);

// <theta, x> for the variation x whose base projection is t (remaining slots
// zero), evaluated through eval_dT_theta / eval_iT_dtheta.
double theta_pairing(Side side, const TTStarQPoint& w, const Eigen::VectorXd& t);

Eigen::VectorXd phase_base(const GeneratingObject& go, const DynamicsCandidate& w);
double theta_pairing(const GeneratingObject& go, const DynamicsCandidate& w,
                     const Eigen::VectorXd& t);

// Membership in the generated Lagrangian submanifold A: the base projection
// satisfies the constraint and a fiber witness reproduces the pairing
// <theta, x> = <dF, z> along a spanning set of constraint-tangent variations.
MembershipResult a_membership(const GeneratingObject& go, const DynamicsCandidate& w,
                              const std::vector<Eigen::VectorXd>& seeds,
                              const SolverConfig& cfg = {});
MembershipResult a_membership(const GeneratingObject& go, const TTStarQPoint& w,
                              const std::vector<Eigen::VectorXd>& seeds,
                              const SolverConfig& cfg = {});

// Composition of a product-side object (a symplectic relation) with an object
// over the relation's source. The result's fiber is [q1; fiber21; fiber1] and
// the matching conditions become constraint rows of the composed family.
// The existential constraint X2 cannot be evaluated pointwise; callers supply
// `result_constraint` when they know it (default: open).
GeneratingObject compose(const GeneratingObject& go21, const GeneratingObject& go1,
                         ConstraintSet result_constraint = {});

// Relation-relation composition (both arguments product-side); the result is
// product-side over factor-2 of go_a and factor-1 of go_b.
GeneratingObject compose_relations(const GeneratingObject& go_a, const GeneratingObject& go_b,
                                   ConstraintSet result_constraint = {});

class VerificationError : public std::runtime_error {
 public:
  VerificationError(const std::string& what, double worst_residual)
      : std::runtime_error(what), worst_residual_(worst_residual) {}
  double worst_residual() const { return worst_residual_; }

 private:
  double worst_residual_;
};

// Section-based reduction (the critical set of the eliminated variables is the
// image of a section): F~ = F o section over the reduced fiber. The section's
// criticality along the fibers of rho_prime is verified at the given sample
// points; a section off the critical set raises VerificationError.
struct SectionSpec {
  int reduced_fiber_dim = 0;
  VectorFn section;           // reduced total coords -> full total coords
  VectorFn rho_prime;         // full total coords -> reduced total coords
  std::function<bool(const Eigen::VectorXd&)> reduced_domain;  // optional
};

GeneratingObject reduce_by_section(const GeneratingObject& go, const SectionSpec& spec,
                                   const std::vector<Eigen::VectorXd>& reduced_samples,
                                   const SolverConfig& cfg = {});

// Fibration-based reduction to a function on the reduced constraint set:
// F~ is induced by constancy of F on the fibres of the critical set over
// reduced_x. `critical_lift(x, t)` parametrizes that fibre; criticality and
// constancy are verified at the sampled bases and parameters.
GeneratingObject reduce_by_fibration(const GeneratingObject& go, const ConstraintSet& reduced_x,
                                     std::function<Eigen::VectorXd(const Eigen::VectorXd&, double)>
                                         critical_lift,
                                     const std::vector<double>& fiber_params,
                                     const std::vector<Eigen::VectorXd>& base_samples,
                                     const SolverConfig& cfg = {});

}  // namespace genfam
