#include "genfam/numdiff.hpp"

#include <cmath>

namespace genfam {

namespace {
double coord_step(double xi, double step) { return step * std::max(1.0, std::abs(xi)); }
}  // namespace

Eigen::VectorXd fd_gradient(const ScalarFn& f, const Eigen::VectorXd& x, double step) {
  Eigen::VectorXd g(x.size());
  Eigen::VectorXd xp = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double h = coord_step(x[i], step);
    xp[i] = x[i] + h;
    const double fp = f(xp);
    xp[i] = x[i] - h;
    const double fm = f(xp);
    xp[i] = x[i];
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

Eigen::MatrixXd fd_jacobian(const VectorFn& f, const Eigen::VectorXd& x, double step) {
  Eigen::VectorXd xp = x;
  Eigen::MatrixXd j;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double h = coord_step(x[i], step);
    xp[i] = x[i] + h;
    const Eigen::VectorXd fp = f(xp);
    xp[i] = x[i] - h;
    const Eigen::VectorXd fm = f(xp);
    xp[i] = x[i];
    if (j.size() == 0) j.resize(fp.size(), x.size());
    j.col(i) = (fp - fm) / (2.0 * h);
  }
  if (j.size() == 0) j.resize(0, x.size());
  return j;
}

Eigen::MatrixXd fd_hessian(const ScalarFn& f, const Eigen::VectorXd& x, double step) {
  const Eigen::Index n = x.size();
  Eigen::MatrixXd h(n, n);
  Eigen::VectorXd xp = x;
  const double f0 = f(x);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double hi = coord_step(x[i], step);
    xp[i] = x[i] + hi;
    const double fp = f(xp);
    xp[i] = x[i] - hi;
    const double fm = f(xp);
    xp[i] = x[i];
    h(i, i) = (fp - 2.0 * f0 + fm) / (hi * hi);
    for (Eigen::Index k = i + 1; k < n; ++k) {
      const double hk = coord_step(x[k], step);
      xp[i] = x[i] + hi;
      xp[k] = x[k] + hk;
      const double fpp = f(xp);
      xp[k] = x[k] - hk;
      const double fpm = f(xp);
      xp[i] = x[i] - hi;
      const double fmm = f(xp);
      xp[k] = x[k] + hk;
      const double fmp = f(xp);
      xp[i] = x[i];
      xp[k] = x[k];
      const double v = (fpp - fpm - fmp + fmm) / (4.0 * hi * hk);
      h(i, k) = v;
      h(k, i) = v;
    }
  }
  return h;
}

Eigen::MatrixXd nullspace(const Eigen::MatrixXd& a, double rel_tol) {
  const Eigen::Index n = a.cols();
  if (a.rows() == 0) return Eigen::MatrixXd::Identity(n, n);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = (sv.size() > 0 ? sv[0] : 0.0) * rel_tol;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > cutoff) ++rank;
  return svd.matrixV().rightCols(n - rank);
}

int numerical_rank(const Eigen::MatrixXd& a, double rel_tol) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  const Eigen::MatrixXd r = qr.matrixR();
  const Eigen::Index m = std::min(r.rows(), r.cols());
  const double largest = std::abs(r(0, 0));
  if (largest == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < m; ++i)
    if (std::abs(r(i, i)) > rel_tol * largest) ++rank;
  return rank;
}

}  // namespace genfam
