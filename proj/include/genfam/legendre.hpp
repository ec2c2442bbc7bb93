#pragma once

#include "genfam/generating_object.hpp"

namespace genfam {

// Lagrangian system: a Lagrangian-side generating object with constraint
// C in TQ and family value +L.
struct LagrangianSystem {
  GeneratingObject object;

  double lagrangian(const Eigen::VectorXd& total) const { return object.family.value(total); }
};

// Hamiltonian system: a Hamiltonian-side generating object whose family value
// is -H (the generating-function sign convention). fiber_dim = 0 makes it a
// Dirac system.
struct HamiltonianSystem {
  GeneratingObject object;

  double hamiltonian(const Eigen::VectorXd& total) const { return -object.family.value(total); }
};

// The canonical pairing relations used to define both transformations:
// a product-side object over T*Q x TQ with F = -<p, v> (Hamiltonian result
// side), and one over TQ x T*Q with F = +<p, qdot> (Lagrangian result side).
// Both carry the diagonal matching q2 = q1 as the constraint.
GeneratingObject pairing_object_lh(int n);
GeneratingObject pairing_object_hl(int n);

// Legendre transformation as composition with the pairing object:
// Z = {(q, p, q', v, ...)}, H(q, p, q', v, y) = <p, v> - L(q', v, y).
HamiltonianSystem legendre_transform(const LagrangianSystem& lag);

// Inverse Legendre transformation: L(q, qdot, q', p, z) = <p, qdot> - H(z).
LagrangianSystem inverse_legendre(const HamiltonianSystem& ham);

// First Legendre relation: (p, y) is a member iff y is critical for (L, eta)
// and <p, u> = <dL, vertical lift of u> for all fiberwise directions u
// tangent to C.
bool lambda1_membership(const LagrangianSystem& lag, const Eigen::VectorXd& p,
                        const Eigen::VectorXd& y_total, const SolverConfig& cfg = {});

// Second Legendre relation: exists a fiber witness over the base v = (q, qdot)
// passing the first relation.
MembershipResult lambda2_membership(const LagrangianSystem& lag, const Eigen::VectorXd& p,
                                    const Eigen::VectorXd& v_base,
                                    const std::vector<Eigen::VectorXd>& seeds,
                                    const SolverConfig& cfg = {});

// First and second inverse Legendre relations, mirror images with TQ and T*Q
// exchanged: <a, v> = <dH, vertical lift of a> along K-tangent fiber
// directions a.
bool omega1_membership(const HamiltonianSystem& ham, const Eigen::VectorXd& v,
                       const Eigen::VectorXd& z_total, const SolverConfig& cfg = {});

MembershipResult omega2_membership(const HamiltonianSystem& ham, const Eigen::VectorXd& v,
                                   const Eigen::VectorXd& p_base,
                                   const std::vector<Eigen::VectorXd>& seeds,
                                   const SolverConfig& cfg = {});

// Local hyperregularity: the linearization of qdot -> p(q, qdot) (p obtained
// through the second relation's witness) has full rank at the given base.
// A failed witness solve anywhere in the finite-difference stencil counts as
// a degenerate point.
bool hyperregular_at(const LagrangianSystem& lag, const Eigen::VectorXd& base,
                     const Eigen::VectorXd& fiber_seed, const SolverConfig& cfg = {});

}  // namespace genfam
