#include "genfam/minkowski.hpp"

#include <cmath>
#include <stdexcept>

namespace genfam {

namespace {
Eigen::VectorXd default_diagonal(int dim) {
  Eigen::VectorXd d = Eigen::VectorXd::Constant(dim, -1.0);
  d[0] = 1.0;
  return d;
}
}  // namespace

MinkowskiSpace::MinkowskiSpace(int dim) : MinkowskiSpace(dim, default_diagonal(dim)) {}

MinkowskiSpace::MinkowskiSpace(int dim, Eigen::VectorXd metric_diagonal)
    : dim_(dim), diag_(std::move(metric_diagonal)) {
  if (dim_ <= 0) throw std::invalid_argument("MinkowskiSpace: dim must be positive");
  if (diag_.size() != dim_)
    throw std::invalid_argument("MinkowskiSpace: metric diagonal length mismatch");
  for (int i = 0; i < dim_; ++i)
    if (diag_[i] == 0.0)
      throw std::invalid_argument("MinkowskiSpace: metric diagonal entries must be nonzero");
}

Covector MinkowskiSpace::metric_apply(const Vector& v) const {
  if (v.coords.size() != dim_) throw std::invalid_argument("metric_apply: dimension mismatch");
  return Covector{diag_.cwiseProduct(v.coords)};
}

Vector MinkowskiSpace::metric_inverse_apply(const Covector& p) const {
  if (p.coords.size() != dim_)
    throw std::invalid_argument("metric_inverse_apply: dimension mismatch");
  return Vector{p.coords.cwiseQuotient(diag_)};
}

double MinkowskiSpace::quadratic_form(const Vector& v) const {
  return pair(metric_apply(v), v);
}

double MinkowskiSpace::co_quadratic_form(const Covector& p) const {
  return pair(p, metric_inverse_apply(p));
}

double MinkowskiSpace::v_norm(const Vector& v) const {
  const double q = quadratic_form(v);
  if (q <= 0.0) throw std::domain_error("v_norm: vector outside the positive cone");
  return std::sqrt(q);
}

double MinkowskiSpace::p_norm(const Covector& p) const {
  const double q = co_quadratic_form(p);
  if (q <= 0.0) throw std::domain_error("p_norm: covector outside the positive cone");
  return std::sqrt(q);
}

double pair(const Covector& p, const Vector& v) { return pair(p.coords, v.coords); }

double pair(const Eigen::VectorXd& p, const Eigen::VectorXd& v) {
  if (p.size() != v.size()) throw std::invalid_argument("pair: dimension mismatch");
  return p.dot(v);
}

}  // namespace genfam
