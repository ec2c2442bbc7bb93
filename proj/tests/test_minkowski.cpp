#include <doctest.h>

#include "genfam/minkowski.hpp"

using namespace genfam;

TEST_CASE("default metric has signature (+,-,-,-)") {
  MinkowskiSpace s(4);
  CHECK(s.dim() == 4);
  CHECK(s.metric_diagonal()[0] == 1.0);
  CHECK(s.metric_diagonal()[1] == -1.0);
  CHECK(s.quadratic_form(Vector{Eigen::Vector4d(1, 0, 0, 0)}) == 1.0);
  CHECK(s.quadratic_form(Vector{Eigen::Vector4d(0, 1, 0, 0)}) == -1.0);
  CHECK(s.quadratic_form(Vector{Eigen::Vector4d(1, 1, 0, 0)}) == 0.0);
}

TEST_CASE("metric and its inverse are mutually inverse") {
  MinkowskiSpace s(4);
  const Eigen::Vector4d v(1.5, -0.25, 2.0, 0.75);
  const Vector back = s.metric_inverse_apply(s.metric_apply(Vector{v}));
  CHECK((back.coords - v).norm() == doctest::Approx(0.0));
  CHECK(s.metric_apply(Vector{v}).coords[1] == doctest::Approx(0.25));
}

TEST_CASE("norms require a timelike argument") {
  MinkowskiSpace s(4);
  CHECK(s.v_norm(Vector{Eigen::Vector4d(2, 0, 0, 0)}) == doctest::Approx(2.0));
  CHECK(s.p_norm(Covector{Eigen::Vector4d(3, 0, 0, 0)}) == doctest::Approx(3.0));
  CHECK_THROWS_AS(s.v_norm(Vector{Eigen::Vector4d(0, 1, 0, 0)}), std::domain_error);
  CHECK_THROWS_AS(s.v_norm(Vector{Eigen::Vector4d(1, 1, 0, 0)}), std::domain_error);
  CHECK_THROWS_AS(s.p_norm(Covector{Eigen::Vector4d(0, 0, 1, 0)}), std::domain_error);
}

TEST_CASE("canonical pairing") {
  const Eigen::Vector4d p(1, 2, 3, 4), v(4, 3, 2, 1);
  CHECK(pair(Covector{p}, Vector{v}) == 20.0);
  CHECK_THROWS_AS(pair(Eigen::VectorXd::Ones(3), Eigen::VectorXd::Ones(4)),
                  std::invalid_argument);
}

TEST_CASE("arbitrary dimensions") {
  MinkowskiSpace s(2);
  CHECK(s.quadratic_form(Vector{Eigen::Vector2d(2, 1)}) == doctest::Approx(3.0));
}
