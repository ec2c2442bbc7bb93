#include <doctest.h>

#include "genfam/homogeneity.hpp"

using namespace genfam;

TEST_CASE("scaling action axioms and argument checks") {
  const ScalingAction act = ScalingAction::tangent_scaling(2);
  Eigen::VectorXd x(4);
  x << 1, 2, 3, 4;
  CHECK((act.apply(1.0, x) - x).norm() == 0.0);
  const Eigen::VectorXd y = act.apply(2.0, act.apply(3.0, x));
  CHECK((y - act.apply(6.0, x)).norm() == doctest::Approx(0.0));
  CHECK(act.apply(2.0, x)[2] == 6.0);
  CHECK(act.apply(2.0, x)[0] == 1.0);
  CHECK_THROWS_AS(act.apply(0.0, x), std::invalid_argument);
  CHECK_THROWS_AS(act.apply(-1.0, x), std::invalid_argument);
  CHECK_THROWS_AS(act.apply(1.0, Eigen::Vector3d::Zero().eval()), std::invalid_argument);
}

TEST_CASE("cotangent lift of tangent scaling") {
  // mu(k): (q, v) -> (q, kv); lift: (q, v; a, b) -> (q, kv; ka, b).
  const ScalingAction act = ScalingAction::tangent_scaling(1);
  Eigen::VectorXd f(4);
  f << 1.0, 2.0, 3.0, 4.0;
  const Eigen::VectorXd g = lifted_cotangent_action(act, 5.0, f);
  CHECK(g[0] == doctest::Approx(1.0));
  CHECK(g[1] == doctest::Approx(10.0));
  CHECK(g[2] == doctest::Approx(15.0));
  CHECK(g[3] == doctest::Approx(4.0));
  CHECK_THROWS_AS(lifted_cotangent_action(act, -1.0, f), std::invalid_argument);
  CHECK_THROWS_AS(lifted_cotangent_action(act, 1.0, Eigen::Vector3d::Zero().eval()),
                  std::invalid_argument);
}

TEST_CASE("hat_kappa scales only the fiber slots") {
  const TTStarQPoint w{Point{Eigen::Vector2d(1, 2)}, Covector{Eigen::Vector2d(3, 4)},
                       Vector{Eigen::Vector2d(5, 6)}, Covector{Eigen::Vector2d(7, 8)}};
  const TTStarQPoint h = hat_kappa(0.5, w);
  CHECK((h.q.coords - w.q.coords).norm() == doctest::Approx(0.0));
  CHECK((h.p.coords - w.p.coords).norm() == doctest::Approx(0.0));
  CHECK((h.qdot.coords - 0.5 * w.qdot.coords).norm() == doctest::Approx(0.0));
  CHECK((h.pdot.coords - 0.5 * w.pdot.coords).norm() == doctest::Approx(0.0));
  CHECK_THROWS_AS(hat_kappa(0.0, w), std::invalid_argument);
}

TEST_CASE("family homogeneity detects the degree") {
  FamilyOfFunctions deg1;
  deg1.base_dim = 2;
  deg1.fiber_dim = 0;
  deg1.value = [](const Eigen::VectorXd& x) { return std::abs(x[1]); };
  FamilyOfFunctions deg2;
  deg2.base_dim = 2;
  deg2.fiber_dim = 0;
  deg2.value = [](const Eigen::VectorXd& x) { return x[1] * x[1]; };

  const ScalingAction act = ScalingAction::tangent_scaling(1);
  std::vector<Eigen::VectorXd> samples{Eigen::Vector2d(1.0, 2.0), Eigen::Vector2d(-1.0, 0.5)};
  std::mt19937_64 rng(3);
  const std::vector<double> ks = log_uniform_scales(25, 1e-3, 1e3, rng);
  for (double k : ks) {
    CHECK(k >= 1e-3);
    CHECK(k <= 1e3);
  }
  CHECK(check_family_homogeneous(deg1, act, samples, ks).passed(1e-12));
  CHECK_FALSE(check_family_homogeneous(deg2, act, samples, ks).passed(1e-2));
}

TEST_CASE("set homogeneity wrapper counts escaping members") {
  const ScalingAction act = ScalingAction::tangent_scaling(1);
  auto cone = [](const Eigen::VectorXd& x) { return x[1] > 0.0; };
  auto ball = [](const Eigen::VectorXd& x) { return x[1] < 2.0; };
  std::vector<Eigen::VectorXd> samples{Eigen::Vector2d(0.0, 1.0)};
  std::mt19937_64 rng(4);
  const std::vector<double> ks = log_uniform_scales(25, 1e-3, 1e3, rng);
  CHECK(check_set_homogeneous(cone, act, samples, ks).membership_failures == 0);
  CHECK(check_set_homogeneous(ball, act, samples, ks).membership_failures > 0);
}

TEST_CASE("product actions act blockwise") {
  const ScalingAction prod =
      ScalingAction::product(ScalingAction::trivial(2), ScalingAction::tangent_scaling(1));
  Eigen::VectorXd x(4);
  x << 1, 2, 3, 4;
  const Eigen::VectorXd y = prod.apply(2.0, x);
  CHECK(y[0] == 1.0);
  CHECK(y[1] == 2.0);
  CHECK(y[2] == 3.0);
  CHECK(y[3] == 8.0);
}
