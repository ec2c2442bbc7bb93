#include <doctest.h>

#include "genfam/legendre.hpp"

using namespace genfam;

namespace {

// L = |v|^2 / 2 on R^n, fiber_dim 0, hyperregular everywhere.
LagrangianSystem euclidean_system(int n) {
  GeneratingObject go;
  go.side = Side::lagrangian;
  go.config_dim = n;
  go.constraint = ConstraintSet::open(2 * n);
  go.family.base_dim = 2 * n;
  go.family.fiber_dim = 0;
  go.family.value = [n](const Eigen::VectorXd& t) { return 0.5 * t.tail(n).squaredNorm(); };
  go.family.gradient = [n](const Eigen::VectorXd& t) {
    Eigen::VectorXd g = Eigen::VectorXd::Zero(2 * n);
    g.tail(n) = t.tail(n);
    return g;
  };
  return LagrangianSystem{go};
}

}  // namespace

TEST_CASE("pairing objects store the canonical pairing") {
  const GeneratingObject lh = pairing_object_lh(4);
  CHECK(lh.product);
  CHECK(lh.side == Side::hamiltonian);
  CHECK(lh.side1 == Side::lagrangian);
  Eigen::VectorXd t(16);
  t.setZero();
  t.segment(4, 4) << 1, 2, 3, 4;   // p
  t.segment(12, 4) << 4, 3, 2, 1;  // v
  CHECK(lh.family.value(t) == doctest::Approx(-20.0));
  const Eigen::VectorXd g = lh.family.gradient(t);
  CHECK(g[4] == doctest::Approx(-4.0));   // d/dp = -v
  CHECK(g[12] == doctest::Approx(-1.0));  // d/dv = -p

  const GeneratingObject hl = pairing_object_hl(4);
  CHECK(hl.side == Side::lagrangian);
  Eigen::VectorXd s(16);
  s.setZero();
  s.segment(4, 4) << 4, 3, 2, 1;   // qdot
  s.segment(12, 4) << 1, 2, 3, 4;  // p
  CHECK(hl.family.value(s) == doctest::Approx(20.0));
}

TEST_CASE("Legendre transform of the Euclidean free point") {
  const LagrangianSystem lag = euclidean_system(2);
  const HamiltonianSystem ham = legendre_transform(lag);
  // total coords [q, p | q', v]; on the matching q = q', the critical fiber
  // has v = p and H = |p|^2 / 2.
  Eigen::VectorXd t(8);
  t << 0, 0, 3, 4, 0, 0, 3, 4;
  // H(q,p,q',v) = <p, v> - L(q', v) = 25 - 12.5
  CHECK(ham.hamiltonian(t) == doctest::Approx(12.5));

  SolverConfig cfg;
  cfg.tolerance = 1e-8;
  // member of the dynamics: qdot = p, pdot = 0
  const TTStarQPoint in{Point{Eigen::Vector2d(1, 1)}, Covector{Eigen::Vector2d(3, 4)},
                        Vector{Eigen::Vector2d(3, 4)}, Covector{Eigen::Vector2d(0, 0)}};
  Eigen::VectorXd seed(4);
  seed << 1, 1, 3, 4;
  CHECK(static_cast<bool>(a_membership(ham.object, in, {seed}, cfg)));
  const TTStarQPoint out{Point{Eigen::Vector2d(1, 1)}, Covector{Eigen::Vector2d(3, 4)},
                         Vector{Eigen::Vector2d(4, 4)}, Covector{Eigen::Vector2d(0, 0)}};
  CHECK_FALSE(static_cast<bool>(a_membership(ham.object, out, {seed}, cfg)));
}

TEST_CASE("inverse transform recovers the Euclidean Lagrangian") {
  const LagrangianSystem lag = euclidean_system(2);
  const LagrangianSystem back = inverse_legendre(legendre_transform(lag));
  // total coords [q, qdot | q', p, q'', v]; stationary data p = v = qdot.
  Eigen::VectorXd t(12);
  t << 0, 0, 3, 4, 0, 0, 3, 4, 0, 0, 3, 4;
  // L = <p, qdot> - H = 25 - 12.5
  CHECK(back.lagrangian(t) == doctest::Approx(12.5));
}

TEST_CASE("second relation on the Euclidean system") {
  const LagrangianSystem lag = euclidean_system(2);
  SolverConfig cfg;
  cfg.tolerance = 1e-8;
  Eigen::VectorXd base(4);
  base << 0.5, -0.5, 2.0, 1.0;
  CHECK(static_cast<bool>(lambda2_membership(lag, Eigen::Vector2d(2.0, 1.0), base, {}, cfg)));
  CHECK_FALSE(static_cast<bool>(lambda2_membership(lag, Eigen::Vector2d(2.0, 1.5), base, {}, cfg)));
}

TEST_CASE("transpose of the second relation via the transformed system") {
  const LagrangianSystem lag = euclidean_system(2);
  const HamiltonianSystem ham = legendre_transform(lag);
  SolverConfig cfg;
  cfg.tolerance = 1e-8;
  Eigen::VectorXd pbase(4);
  pbase << 0.5, -0.5, 2.0, 1.0;
  Eigen::VectorXd seed(4);
  seed << 0.5, -0.5, 2.0, 1.0;
  CHECK(static_cast<bool>(omega2_membership(ham, Eigen::Vector2d(2.0, 1.0), pbase, {seed}, cfg)));
  CHECK_FALSE(
      static_cast<bool>(omega2_membership(ham, Eigen::Vector2d(0.0, 1.0), pbase, {seed}, cfg)));
}

TEST_CASE("hyperregularity of the Euclidean system") {
  const LagrangianSystem lag = euclidean_system(2);
  Eigen::VectorXd base(4);
  base << 0.0, 0.0, 1.0, 2.0;
  CHECK(hyperregular_at(lag, base, Eigen::VectorXd(0)));
}
