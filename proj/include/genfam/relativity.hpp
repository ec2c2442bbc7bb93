#pragma once

#include <random>

#include "genfam/legendre.hpp"

namespace genfam {

// Free relativistic particle: L(q, qdot) = m sqrt(<g(qdot), qdot>) on the
// open cone of timelike velocities.
struct ParticleModel {
  MinkowskiSpace space;
  double mass = 1.0;
};

// Space-time geometric optics: L(q, qdot, mu) = <g(qdot), qdot> / (2 mu) on
// nonzero velocities, mu > 0.
struct OpticsModel {
  MinkowskiSpace space;
};

struct ParticleSystems {
  LagrangianSystem lagrangian;
  HamiltonianSystem hamiltonian_full;     // H(q, p, v) = <p, v> - m ||v||
  HamiltonianSystem hamiltonian_reduced;  // H(q, p, lambda) = lambda (||p|| - m)
  HamiltonianSystem hamiltonian_reduced_minus;  // -lambda (||p|| + m); generates nothing
  HamiltonianSystem dirac;                // zero function on the mass shell
};

struct OpticsSystems {
  LagrangianSystem lagrangian;
  HamiltonianSystem hamiltonian_full;     // H(q, p, v, mu) = <p, v> - <g(v), v>/(2 mu)
  HamiltonianSystem hamiltonian_reduced;  // H(q, p, mu) = (mu/2) <p, g^-1(p)>
};

// Builds the full chain of systems; the reductions are verified internally at
// deterministic sample points (VerificationError on failure).
ParticleSystems particle_systems(const ParticleModel& model, const SolverConfig& cfg = {});
OpticsSystems optics_systems(const OpticsModel& model, const SolverConfig& cfg = {});

// Round trips: inverse Legendre transformation of the reduced Hamiltonian
// system followed by the section reduction that recovers the original
// Lagrangian family.
LagrangianSystem particle_roundtrip_lagrangian(const ParticleModel& model,
                                               const SolverConfig& cfg = {});
LagrangianSystem optics_roundtrip_lagrangian(const OpticsModel& model,
                                             const SolverConfig& cfg = {});

// Closed-form dynamics oracles, used as independent references for the
// generic membership machinery.
bool particle_dynamics_membership(const ParticleModel& model, const TTStarQPoint& w,
                                  double tol = 1e-8);
bool optics_dynamics_membership(const OpticsModel& model, const TTStarQPoint& w,
                                double tol = 1e-8);

// Closed-form graphs of the Legendre relations.
// Particle second relation: p = m g(qdot) / ||qdot|| on timelike qdot.
bool particle_graph_lambda2(const ParticleModel& model, const Eigen::VectorXd& p,
                            const Eigen::VectorXd& q, const Eigen::VectorXd& qdot,
                            double tol = 1e-8);
// Optics first relation: null qdot and mu p = g(qdot).
bool optics_graph_lambda1(const OpticsModel& model, const Eigen::VectorXd& p,
                          const Eigen::VectorXd& q, const Eigen::VectorXd& qdot, double mu,
                          double tol = 1e-8);
// Optics second relation: null qdot and mu p = g(qdot) for some mu > 0.
bool optics_graph_lambda2(const OpticsModel& model, const Eigen::VectorXd& p,
                          const Eigen::VectorXd& q, const Eigen::VectorXd& qdot,
                          double tol = 1e-8);
// Optics first inverse relation (reduced system): null p and qdot = mu g^-1(p).
bool optics_graph_omega1(const OpticsModel& model, const Eigen::VectorXd& qdot,
                         const Eigen::VectorXd& q, const Eigen::VectorXd& p, double mu,
                         double tol = 1e-8);

// Deterministic samplers.
Eigen::VectorXd random_point(int dim, std::mt19937_64& rng);
Eigen::VectorXd random_timelike_vector(const MinkowskiSpace& space, std::mt19937_64& rng);
Eigen::VectorXd random_null_vector(const MinkowskiSpace& space, std::mt19937_64& rng);
Eigen::VectorXd random_timelike_covector(const MinkowskiSpace& space, std::mt19937_64& rng);

TTStarQPoint random_particle_member(const ParticleModel& model, std::mt19937_64& rng);
TTStarQPoint random_particle_nonmember(const ParticleModel& model, std::mt19937_64& rng);
TTStarQPoint random_optics_member(const OpticsModel& model, std::mt19937_64& rng);
TTStarQPoint random_optics_nonmember(const OpticsModel& model, std::mt19937_64& rng);

// Straight-line flows with the gauge qdot = g^-1(p)/m (particle) and
// qdot = mu g^-1(p) (optics). Throws std::invalid_argument when the initial
// momentum is off the model's constraint.
std::vector<TTStarQPoint> particle_trajectory(const ParticleModel& model,
                                              const Eigen::VectorXd& q0,
                                              const Eigen::VectorXd& p0, int steps,
                                              double step_size);
std::vector<TTStarQPoint> optics_trajectory(const OpticsModel& model, const Eigen::VectorXd& q0,
                                            const Eigen::VectorXd& p0, int steps,
                                            double step_size, double mu = 1.0);

}  // namespace genfam
