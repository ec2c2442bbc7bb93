#include <doctest.h>

#include "genfam/relativity.hpp"

using namespace genfam;

namespace {

const MinkowskiSpace& space4() {
  static MinkowskiSpace s(4);
  return s;
}

}  // namespace

TEST_CASE("particle dynamics oracle") {
  const ParticleModel m{space4(), 1.0};
  // qdot = (2, 0, 0, 0) timelike, p = g(qdot)/|qdot| = (1, 0, 0, 0), pdot = 0.
  const TTStarQPoint in{Point{Eigen::Vector4d::Zero()}, Covector{Eigen::Vector4d(1, 0, 0, 0)},
                        Vector{Eigen::Vector4d(2, 0, 0, 0)}, Covector{Eigen::Vector4d::Zero()}};
  CHECK(particle_dynamics_membership(m, in));
  TTStarQPoint bad = in;
  bad.pdot.coords[1] = 0.25;
  CHECK_FALSE(particle_dynamics_membership(m, bad));
  bad = in;
  bad.p.coords[0] = 2.0;  // off the shell direction
  CHECK_FALSE(particle_dynamics_membership(m, bad));
  bad = in;
  bad.qdot.coords = Eigen::Vector4d(0, 1, 0, 0);  // spacelike velocity
  CHECK_FALSE(particle_dynamics_membership(m, bad));
}

TEST_CASE("optics dynamics oracle") {
  const OpticsModel m{space4()};
  // null qdot = (1, -1, 0, 0), p = g(qdot)/mu = (0.5, 0.5, 0, 0) with mu = 2.
  const TTStarQPoint in{Point{Eigen::Vector4d::Zero()},
                        Covector{Eigen::Vector4d(0.5, 0.5, 0, 0)},
                        Vector{Eigen::Vector4d(1, -1, 0, 0)}, Covector{Eigen::Vector4d::Zero()}};
  CHECK(optics_dynamics_membership(m, in));
  TTStarQPoint bad = in;
  bad.qdot.coords = Eigen::Vector4d(2, 1, 0, 0);  // timelike
  CHECK_FALSE(optics_dynamics_membership(m, bad));
  bad = in;
  bad.p.coords = -bad.p.coords;  // opposite ray
  CHECK_FALSE(optics_dynamics_membership(m, bad));
  bad = in;
  bad.pdot.coords[0] = 0.1;
  CHECK_FALSE(optics_dynamics_membership(m, bad));
}

TEST_CASE("system values, particle") {
  const ParticleModel m{space4(), 1.0};
  const ParticleSystems sys = particle_systems(m);
  Eigen::VectorXd x(8);
  x << 0, 0, 0, 0, 2, 0, 0, 0;
  CHECK(sys.lagrangian.lagrangian(x) == doctest::Approx(2.0));

  Eigen::VectorXd z(9);
  z << 0, 0, 0, 0, 2, 0, 0, 0, 3;  // p = (2,0,0,0), lambda = 3
  CHECK(sys.hamiltonian_reduced.hamiltonian(z) == doctest::Approx(3.0));
  CHECK(sys.hamiltonian_reduced_minus.hamiltonian(z) == doctest::Approx(-9.0));

  Eigen::VectorXd shell(8);
  shell << 0, 0, 0, 0, 1, 0, 0, 0;
  CHECK(sys.dirac.hamiltonian(shell) == doctest::Approx(0.0));
  CHECK(sys.dirac.object.family.fiber_dim == 0);
}

TEST_CASE("system values, optics") {
  const OpticsModel m{space4()};
  const OpticsSystems sys = optics_systems(m);
  Eigen::VectorXd z(9);
  z << 0, 0, 0, 0, 1, 0, 0, 0, 2;  // p = (1,0,0,0), mu = 2
  CHECK(sys.hamiltonian_reduced.hamiltonian(z) == doctest::Approx(1.0));

  Eigen::VectorXd x(9);
  x << 0, 0, 0, 0, 1, 1, 0, 0, 2;  // qdot = (1,1,0,0), mu = 2
  CHECK(sys.lagrangian.lagrangian(x) == doctest::Approx(0.0));
  x.segment(4, 4) << 2, 0, 0, 0;
  CHECK(sys.lagrangian.lagrangian(x) == doctest::Approx(1.0));
}

TEST_CASE("round-trip Lagrangians") {
  const ParticleModel pm{space4(), 1.0};
  const LagrangianSystem prt = particle_roundtrip_lagrangian(pm);
  Eigen::VectorXd x(8);
  x << 0, 0, 0, 0, 5, 3, 0, 0;
  CHECK(prt.lagrangian(x) == doctest::Approx(4.0).epsilon(1e-9));

  const OpticsModel om{space4()};
  const LagrangianSystem ort = optics_roundtrip_lagrangian(om);
  Eigen::VectorXd y(9);
  y << 0, 0, 0, 0, 2, 0, 0, 0, 4;  // qdot = (2,0,0,0), mu = 4
  CHECK(ort.lagrangian(y) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("samplers respect the oracles") {
  const ParticleModel pm{space4(), 1.0};
  const OpticsModel om{space4()};
  std::mt19937_64 rng(5150);
  for (int i = 0; i < 50; ++i) {
    CHECK(particle_dynamics_membership(pm, random_particle_member(pm, rng)));
    CHECK_FALSE(particle_dynamics_membership(pm, random_particle_nonmember(pm, rng)));
    CHECK(optics_dynamics_membership(om, random_optics_member(om, rng)));
    CHECK_FALSE(optics_dynamics_membership(om, random_optics_nonmember(om, rng)));
  }
}

TEST_CASE("particle trajectory stays in the dynamics") {
  const ParticleModel pm{space4(), 1.0};
  const Eigen::Vector4d q0(0, 0, 0, 0), p0(1, 0, 0, 0);
  const auto traj = particle_trajectory(pm, q0, p0, 50, 0.1);
  CHECK(traj.size() == 50);
  for (const auto& w : traj) {
    CHECK(particle_dynamics_membership(pm, w));
    CHECK(w.pdot.coords.norm() == 0.0);
  }
  CHECK(traj[10].q.coords[0] == doctest::Approx(1.0));
  CHECK_THROWS_AS(particle_trajectory(pm, q0, Eigen::Vector4d(0, 1, 0, 0), 10, 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(particle_trajectory(pm, q0, Eigen::Vector4d(2, 0, 0, 0), 10, 0.1),
                  std::invalid_argument);
}

TEST_CASE("optics trajectory follows the null ray") {
  const OpticsModel om{space4()};
  const Eigen::Vector4d q0(0, 0, 0, 0), p0(1, -1, 0, 0);
  const auto traj = optics_trajectory(om, q0, p0, 50, 0.1);
  CHECK(traj.size() == 50);
  for (const auto& w : traj) CHECK(optics_dynamics_membership(om, w));
  CHECK_THROWS_AS(optics_trajectory(om, q0, Eigen::Vector4d(1, 0, 0, 0), 10, 0.1),
                  std::invalid_argument);
}

TEST_CASE("relation graph oracles at hand points") {
  const ParticleModel pm{space4(), 1.0};
  const Eigen::Vector4d q(0, 0, 0, 0);
  CHECK(particle_graph_lambda2(pm, Eigen::Vector4d(1, 0, 0, 0), q, Eigen::Vector4d(3, 0, 0, 0)));
  CHECK_FALSE(
      particle_graph_lambda2(pm, Eigen::Vector4d(2, 0, 0, 0), q, Eigen::Vector4d(3, 0, 0, 0)));

  const OpticsModel om{space4()};
  const Eigen::Vector4d vn(1, -1, 0, 0);  // g(vn) = (1, 1, 0, 0)
  CHECK(optics_graph_lambda1(om, Eigen::Vector4d(0.5, 0.5, 0, 0), q, vn, 2.0));
  CHECK_FALSE(optics_graph_lambda1(om, Eigen::Vector4d(0.5, 0.5, 0, 0), q, vn, 1.0));
  CHECK(optics_graph_lambda2(om, Eigen::Vector4d(0.5, 0.5, 0, 0), q, vn));
  CHECK_FALSE(optics_graph_lambda2(om, Eigen::Vector4d(-0.5, -0.5, 0, 0), q, vn));
  CHECK(optics_graph_omega1(om, Eigen::Vector4d(2, 2, 0, 0), q, Eigen::Vector4d(1, -1, 0, 0),
                            2.0));
  CHECK_FALSE(optics_graph_omega1(om, Eigen::Vector4d(2, 2, 0, 0), q,
                                  Eigen::Vector4d(1, 0, 0, 0), 2.0));
}
