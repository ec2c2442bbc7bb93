#pragma once

#include <Eigen/Dense>
#include <vector>

namespace genfam {

// Affine Minkowski model: Q, TQ, T*Q are coordinate products Q x V, Q x V*.
// Points, vectors and covectors are plain coordinate tuples of length dim.
struct Point {
  Eigen::VectorXd coords;
};

struct Vector {
  Eigen::VectorXd coords;
};

struct Covector {
  Eigen::VectorXd coords;
};

// Flat space-time (Q, V, sigma, g) with a diagonal metric. The default is the
// 4-dimensional (+,-,-,-) metric.
class MinkowskiSpace {
 public:
  explicit MinkowskiSpace(int dim = 4);
  MinkowskiSpace(int dim, Eigen::VectorXd metric_diagonal);

  int dim() const { return dim_; }
  const Eigen::VectorXd& metric_diagonal() const { return diag_; }

  Covector metric_apply(const Vector& v) const;
  Vector metric_inverse_apply(const Covector& p) const;

  // <g(v), v> and <p, g^-1(p)>; may be negative.
  double quadratic_form(const Vector& v) const;
  double co_quadratic_form(const Covector& p) const;

  // ||v|| = sqrt(<g(v), v>); throws std::domain_error on a nonpositive form.
  double v_norm(const Vector& v) const;
  // sqrt(<p, g^-1(p)>); throws std::domain_error on a nonpositive form.
  double p_norm(const Covector& p) const;

 private:
  int dim_;
  Eigen::VectorXd diag_;
};

// Canonical pairing <p, v>. Throws std::invalid_argument on dimension mismatch.
double pair(const Covector& p, const Vector& v);
double pair(const Eigen::VectorXd& p, const Eigen::VectorXd& v);

}  // namespace genfam
