#pragma once

#include <Eigen/Dense>
#include <functional>

namespace genfam {

using ScalarFn = std::function<double(const Eigen::VectorXd&)>;
using VectorFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
using MatrixFn = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;

// Central-difference first derivatives. Step is relative to coordinate scale.
Eigen::VectorXd fd_gradient(const ScalarFn& f, const Eigen::VectorXd& x, double step);
Eigen::MatrixXd fd_jacobian(const VectorFn& f, const Eigen::VectorXd& x, double step);

// Central second differences, symmetrized.
Eigen::MatrixXd fd_hessian(const ScalarFn& f, const Eigen::VectorXd& x, double step);

// Orthonormal kernel basis of A (columns). For a 0-row matrix returns the identity.
Eigen::MatrixXd nullspace(const Eigen::MatrixXd& a, double rel_tol);

// Numerical rank via column-pivoted QR, threshold relative to the largest pivot.
int numerical_rank(const Eigen::MatrixXd& a, double rel_tol);

}  // namespace genfam
