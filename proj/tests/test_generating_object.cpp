#include <doctest.h>

#include "genfam/generating_object.hpp"

using namespace genfam;

namespace {

// Free nonrelativistic point on R^2: L = |v|^2 / 2, fiber_dim 0.
GeneratingObject euclidean_lagrangian() {
  GeneratingObject go;
  go.side = Side::lagrangian;
  go.config_dim = 2;
  go.constraint = ConstraintSet::open(4);
  go.family.base_dim = 4;
  go.family.fiber_dim = 0;
  go.family.value = [](const Eigen::VectorXd& t) { return 0.5 * t.tail(2).squaredNorm(); };
  go.family.gradient = [](const Eigen::VectorXd& t) {
    Eigen::VectorXd g = Eigen::VectorXd::Zero(4);
    g.tail(2) = t.tail(2);
    return g;
  };
  return go;
}

}  // namespace

TEST_CASE("open constraint sets accept everything") {
  const ConstraintSet open = ConstraintSet::open(3);
  CHECK(open.contains(Eigen::Vector3d(1, 2, 3)));
  const Eigen::MatrixXd t = open.tangent_basis(Eigen::Vector3d::Zero());
  CHECK(t.rows() == 3);
  CHECK(t.cols() == 3);
}

TEST_CASE("defining maps cut tangent spaces") {
  ConstraintSet circle;
  circle.ambient_dim = 2;
  circle.predicate = [](const Eigen::VectorXd& x) {
    return std::abs(x.squaredNorm() - 1.0) < 1e-9;
  };
  circle.defining = [](const Eigen::VectorXd& x) {
    Eigen::VectorXd c(1);
    c << x.squaredNorm() - 1.0;
    return c;
  };
  circle.defining_dim = 1;
  const Eigen::Vector2d x(1.0, 0.0);
  CHECK(circle.contains(x));
  const Eigen::MatrixXd t = circle.tangent_basis(x);
  REQUIRE(t.cols() == 1);
  CHECK(std::abs(t(0, 0)) < 1e-6);        // tangent is vertical at (1, 0)
  CHECK(std::abs(t(1, 0)) == doctest::Approx(1.0));
}

TEST_CASE("phase base projections per side") {
  const TTStarQPoint w{Point{Eigen::Vector2d(1, 2)}, Covector{Eigen::Vector2d(3, 4)},
                       Vector{Eigen::Vector2d(5, 6)}, Covector{Eigen::Vector2d(7, 8)}};
  const Eigen::VectorXd lag = phase_base(Side::lagrangian, w);
  CHECK(lag[0] == 1.0);
  CHECK(lag[2] == 5.0);  // (q, qdot)
  const Eigen::VectorXd ham = phase_base(Side::hamiltonian, w);
  CHECK(ham[2] == 3.0);  // (q, p)
}

TEST_CASE("a_membership on a zero-fiber Lagrangian object is the graph of dL") {
  const GeneratingObject go = euclidean_lagrangian();
  SolverConfig cfg;
  cfg.tolerance = 1e-8;
  // member: p = v, pdot = dL/dq = 0
  const TTStarQPoint in{Point{Eigen::Vector2d(0, 0)}, Covector{Eigen::Vector2d(1, -2)},
                        Vector{Eigen::Vector2d(1, -2)}, Covector{Eigen::Vector2d(0, 0)}};
  CHECK(static_cast<bool>(a_membership(go, in, {}, cfg)));
  const TTStarQPoint out{Point{Eigen::Vector2d(0, 0)}, Covector{Eigen::Vector2d(1, -2)},
                         Vector{Eigen::Vector2d(1, -2)}, Covector{Eigen::Vector2d(0.5, 0)}};
  CHECK_FALSE(static_cast<bool>(a_membership(go, out, {}, cfg)));
  const TTStarQPoint out2{Point{Eigen::Vector2d(0, 0)}, Covector{Eigen::Vector2d(2, -2)},
                          Vector{Eigen::Vector2d(1, -2)}, Covector{Eigen::Vector2d(0, 0)}};
  CHECK_FALSE(static_cast<bool>(a_membership(go, out2, {}, cfg)));
}

TEST_CASE("reduce_by_section keeps values and rejects non-critical sections") {
  // Family over (q, v) with one fiber slot u: F = v u - u^2 / 2, critical at
  // u = v, reduced value v^2 / 2.
  GeneratingObject go;
  go.side = Side::lagrangian;
  go.config_dim = 1;
  go.constraint = ConstraintSet::open(2);
  go.family.base_dim = 2;
  go.family.fiber_dim = 1;
  go.family.value = [](const Eigen::VectorXd& t) { return t[1] * t[2] - 0.5 * t[2] * t[2]; };

  SectionSpec good;
  good.reduced_fiber_dim = 0;
  good.section = [](const Eigen::VectorXd& x) {
    Eigen::VectorXd y(3);
    y << x[0], x[1], x[1];
    return y;
  };
  good.rho_prime = [](const Eigen::VectorXd& t) { return Eigen::VectorXd(t.head(2)); };

  std::vector<Eigen::VectorXd> samples;
  samples.push_back(Eigen::Vector2d(0.0, 1.5));
  samples.push_back(Eigen::Vector2d(2.0, -0.5));

  const GeneratingObject red = reduce_by_section(go, good, samples);
  CHECK(red.family.fiber_dim == 0);
  CHECK(red.family.value(Eigen::Vector2d(0.0, 3.0)) == doctest::Approx(4.5));

  SectionSpec bad = good;
  bad.section = [](const Eigen::VectorXd& x) {
    Eigen::VectorXd y(3);
    y << x[0], x[1], x[1] + 1.0;
    return y;
  };
  CHECK_THROWS_AS(reduce_by_section(go, bad, samples), VerificationError);
}

TEST_CASE("reduce_by_fibration demands constancy on fibers") {
  // F constant on the fiber {(x, t)} over x: reduction succeeds; a fiber
  // dependence is flagged.
  GeneratingObject go;
  go.side = Side::hamiltonian;
  go.config_dim = 1;
  go.constraint = ConstraintSet::open(2);
  go.family.base_dim = 2;
  go.family.fiber_dim = 1;
  go.family.value = [](const Eigen::VectorXd& t) { return t[0] * t[0]; };

  ConstraintSet reduced = ConstraintSet::open(2);
  auto lift = [](const Eigen::VectorXd& x, double t) {
    Eigen::VectorXd y(3);
    y << x[0], x[1], t;
    return y;
  };
  std::vector<double> params{0.0, 1.0, -1.0};
  std::vector<Eigen::VectorXd> bases{Eigen::Vector2d(0.5, 0.5), Eigen::Vector2d(-1.0, 2.0)};

  const GeneratingObject red = reduce_by_fibration(go, reduced, lift, params, bases);
  CHECK(red.family.fiber_dim == 0);
  CHECK(red.family.value(Eigen::Vector2d(3.0, 0.0)) == doctest::Approx(9.0));

  GeneratingObject dep = go;
  dep.family.value = [](const Eigen::VectorXd& t) { return t[0] * t[0] + t[2]; };
  CHECK_THROWS_AS(reduce_by_fibration(dep, reduced, lift, params, bases), VerificationError);
}
