#include <doctest.h>

#include "genfam/family.hpp"

using namespace genfam;

namespace {

// F(x; u) = <x, u> - |u|^2 / 2 over base dim 2, fiber dim 2.
// Critical point: u = x, kappa = dF/dx = u = x, generated set = graph of id.
FamilyOfFunctions quadratic_family() {
  FamilyOfFunctions f;
  f.base_dim = 2;
  f.fiber_dim = 2;
  f.value = [](const Eigen::VectorXd& t) {
    return t.head(2).dot(t.tail(2)) - 0.5 * t.tail(2).squaredNorm();
  };
  return f;
}

}  // namespace

TEST_CASE("vertical gradient and criticality residual") {
  const FamilyOfFunctions f = quadratic_family();
  Eigen::VectorXd t(4);
  t << 1.0, 2.0, 1.0, 2.0;
  const Eigen::VectorXd vg = vertical_gradient(f, t);
  CHECK(vg.norm() == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(criticality_residual(f, t) <= 1e-9);
  t[2] = 3.0;
  CHECK(criticality_residual(f, t) > 1.0);
}

TEST_CASE("solver finds the fiber critical point") {
  const FamilyOfFunctions f = quadratic_family();
  const Eigen::Vector2d base(0.5, -1.5);
  const auto cp = solve_critical(f, base, Eigen::Vector2d(3.0, 3.0));
  REQUIRE(cp.has_value());
  CHECK((cp->fiber - base).norm() == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(cp->residual <= 1e-10);
}

TEST_CASE("domain exit is a no-solution result") {
  FamilyOfFunctions f = quadratic_family();
  f.domain = [](const Eigen::VectorXd& t) { return t.tail(2).norm() < 0.1; };
  const auto cp = solve_critical(f, Eigen::Vector2d(5.0, 5.0), Eigen::Vector2d(0.05, 0.0));
  CHECK_FALSE(cp.has_value());
}

TEST_CASE("mixed second derivatives and classification") {
  const FamilyOfFunctions f = quadratic_family();
  const Eigen::Vector2d base(1.0, 1.0);
  const auto cp = solve_critical(f, base, Eigen::Vector2d::Zero());
  REQUIRE(cp.has_value());
  const Eigen::MatrixXd w = w_matrix(f, *cp);
  CHECK(w.rows() == 2);
  CHECK(w.cols() == 4);
  const Classification cl = classify_at(f, *cp);
  CHECK(cl.rank == 2);
  CHECK(cl.morse_at_point);
}

TEST_CASE("kappa map and membership") {
  const FamilyOfFunctions f = quadratic_family();
  const Eigen::Vector2d base(0.25, 0.75);
  const auto cp = solve_critical(f, base, Eigen::Vector2d::Zero());
  REQUIRE(cp.has_value());
  const Eigen::VectorXd k = kappa_map(f, *cp);
  CHECK((k - base).norm() == doctest::Approx(0.0).epsilon(1e-7));

  std::vector<Eigen::VectorXd> seeds{Eigen::Vector2d::Zero()};
  CHECK(static_cast<bool>(n_membership(f, base, base, seeds)));
  CHECK_FALSE(static_cast<bool>(n_membership(f, base, Eigen::Vector2d(5.0, 5.0), seeds)));
}

TEST_CASE("kappa map rejects non-critical points") {
  const FamilyOfFunctions f = quadratic_family();
  CriticalPoint bogus{Eigen::Vector2d(1.0, 1.0), Eigen::Vector2d(9.0, 9.0), Eigen::VectorXd(0),
                      0.0};
  CHECK_THROWS_AS(kappa_map(f, bogus), std::logic_error);
}

TEST_CASE("constrained family uses Lagrange-corrected stationarity") {
  // F(x; u) = <x, u> with constraint u0 - u1 = 0. Critical iff x0 + x1 = 0
  // along the tangent direction (1,1).
  FamilyOfFunctions f;
  f.base_dim = 2;
  f.fiber_dim = 2;
  f.value = [](const Eigen::VectorXd& t) { return t.head(2).dot(t.tail(2)); };
  f.constraint = [](const Eigen::VectorXd& t) {
    Eigen::VectorXd c(1);
    c << t[2] - t[3];
    return c;
  };
  f.constraint_dim = 1;
  Eigen::VectorXd t(4);
  t << 1.0, -1.0, 0.5, 0.5;
  CHECK(criticality_residual(f, t) <= 1e-9);
  t[0] = 2.0;
  CHECK(criticality_residual(f, t) > 0.1);
}

TEST_CASE("directional membership matches targets along chosen directions") {
  const FamilyOfFunctions f = quadratic_family();
  const Eigen::Vector2d base(0.3, -0.8);
  Eigen::MatrixXd dirs(2, 1);
  dirs << 1.0, 0.0;
  Eigen::VectorXd targets(1);
  targets << 0.3;  // kappa = base, paired with e0
  std::vector<Eigen::VectorXd> seeds{Eigen::Vector2d::Zero()};
  CHECK(static_cast<bool>(directional_membership(f, base, dirs, targets, seeds)));
  targets << 1.3;
  CHECK_FALSE(static_cast<bool>(directional_membership(f, base, dirs, targets, seeds)));
}
