#include "genfam/homogeneity.hpp"

#include <cmath>
#include <stdexcept>

namespace genfam {

Eigen::VectorXd ScalingAction::apply(double k, const Eigen::VectorXd& x) const {
  if (k <= 0.0) throw std::invalid_argument("ScalingAction: scale must be positive");
  if (x.size() != dim) throw std::invalid_argument("ScalingAction: dimension mismatch");
  return map(k, x);
}

Eigen::MatrixXd ScalingAction::jac(double k, const Eigen::VectorXd& x,
                                   const SolverConfig& cfg) const {
  if (jacobian) return jacobian(k, x);
  return fd_jacobian([this, k](const Eigen::VectorXd& z) { return map(k, z); }, x, cfg.fd_step);
}

ScalingAction ScalingAction::trivial(int dim) {
  ScalingAction a;
  a.dim = dim;
  a.map = [](double, const Eigen::VectorXd& x) { return x; };
  a.jacobian = [dim](double, const Eigen::VectorXd&) {
    return Eigen::MatrixXd(Eigen::MatrixXd::Identity(dim, dim));
  };
  return a;
}

ScalingAction ScalingAction::tangent_scaling(int n) {
  ScalingAction a;
  a.dim = 2 * n;
  a.map = [n](double k, const Eigen::VectorXd& x) {
    Eigen::VectorXd y = x;
    y.tail(n) *= k;
    return y;
  };
  a.jacobian = [n](double k, const Eigen::VectorXd&) {
    Eigen::MatrixXd j = Eigen::MatrixXd::Identity(2 * n, 2 * n);
    j.bottomRightCorner(n, n) *= k;
    return j;
  };
  return a;
}

ScalingAction ScalingAction::custom(
    int dim, std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)> map) {
  ScalingAction a;
  a.dim = dim;
  a.map = std::move(map);
  return a;
}

ScalingAction ScalingAction::product(const ScalingAction& a, const ScalingAction& b) {
  const int da = a.dim;
  const int db = b.dim;
  ScalingAction out;
  out.dim = da + db;
  auto ma = a.map;
  auto mb = b.map;
  out.map = [da, db, ma, mb](double k, const Eigen::VectorXd& x) {
    Eigen::VectorXd y(da + db);
    y.head(da) = ma(k, x.head(da));
    y.tail(db) = mb(k, x.tail(db));
    return y;
  };
  if (a.jacobian && b.jacobian) {
    auto ja = a.jacobian;
    auto jb = b.jacobian;
    out.jacobian = [da, db, ja, jb](double k, const Eigen::VectorXd& x) {
      Eigen::MatrixXd j = Eigen::MatrixXd::Zero(da + db, da + db);
      j.topLeftCorner(da, da) = ja(k, x.head(da));
      j.bottomRightCorner(db, db) = jb(k, x.tail(db));
      return j;
    };
  }
  return out;
}

Eigen::VectorXd lifted_cotangent_action(const ScalingAction& mu, double k,
                                        const Eigen::VectorXd& f, const SolverConfig& cfg) {
  if (k <= 0.0) throw std::invalid_argument("lifted_cotangent_action: scale must be positive");
  const int d = mu.dim;
  if (f.size() != 2 * d)
    throw std::invalid_argument("lifted_cotangent_action: point size must be twice the base dim");
  const Eigen::VectorXd x = f.head(d);
  const Eigen::VectorXd a = f.tail(d);
  const Eigen::VectorXd y = mu.apply(k, x);
  const Eigen::MatrixXd j = mu.jac(1.0 / k, y, cfg);
  Eigen::VectorXd out(2 * d);
  out.head(d) = y;
  out.tail(d) = k * (j.transpose() * a);
  return out;
}

TTStarQPoint hat_kappa(double k, const TTStarQPoint& w, const SolverConfig& cfg) {
  if (k <= 0.0) throw std::invalid_argument("hat_kappa: scale must be positive");
  const int n = static_cast<int>(w.q.coords.size());
  const TStarTQPoint s = alpha_Q(w);
  Eigen::VectorXd f(4 * n);
  f << s.q.coords, s.qdot.coords, s.a.coords, s.b.coords;
  const Eigen::VectorXd g = lifted_cotangent_action(ScalingAction::tangent_scaling(n), k, f, cfg);
  TStarTQPoint out{Point{g.head(n)}, Vector{g.segment(n, n)}, Covector{g.segment(2 * n, n)},
                   Covector{g.segment(3 * n, n)}};
  return alpha_Q_inv(out);
}

HomogeneityReport check_family_homogeneous(const FamilyOfFunctions& fam,
                                           const ScalingAction& action,
                                           const std::vector<Eigen::VectorXd>& samples,
                                           const std::vector<double>& ks) {
  HomogeneityReport rep;
  for (const auto& r : samples) {
    if (!fam.in_domain(r)) {
      ++rep.domain_failures;
      continue;
    }
    const double fr = fam.value(r);
    for (double k : ks) {
      ++rep.samples;
      const Eigen::VectorXd rk = action.apply(k, r);
      if (!fam.in_domain(rk)) {
        ++rep.domain_failures;
        continue;
      }
      const double res = std::abs(fam.value(rk) - k * fr) / std::max(1.0, std::abs(k * fr));
      rep.max_residual = std::max(rep.max_residual, res);
    }
  }
  return rep;
}

HomogeneityReport check_critical_set_homogeneous(
    const FamilyOfFunctions& fam, const ScalingAction& action,
    const std::vector<Eigen::VectorXd>& critical_points, const std::vector<double>& ks,
    const SolverConfig& cfg) {
  HomogeneityReport rep;
  for (const auto& r : critical_points) {
    for (double k : ks) {
      ++rep.samples;
      const Eigen::VectorXd rk = action.apply(k, r);
      if (!fam.in_domain(rk)) {
        ++rep.domain_failures;
        continue;
      }
      rep.max_residual = std::max(rep.max_residual, criticality_residual(fam, rk, cfg));
    }
  }
  return rep;
}

HomogeneityReport check_set_homogeneous(
    const std::function<bool(const Eigen::VectorXd&)>& member, const ScalingAction& action,
    const std::vector<Eigen::VectorXd>& samples, const std::vector<double>& ks) {
  HomogeneityReport rep;
  for (const auto& w : samples) {
    for (double k : ks) {
      ++rep.samples;
      if (!member(action.apply(k, w))) ++rep.membership_failures;
    }
  }
  return rep;
}

std::vector<double> log_uniform_scales(int count, double lo, double hi, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  std::vector<double> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(std::exp(u(rng)));
  return out;
}

}  // namespace genfam
