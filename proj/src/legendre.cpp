#include "genfam/legendre.hpp"

#include <cmath>

namespace genfam {

namespace {

// Columns of the constraint tangent basis whose q-block vanishes: the
// fiberwise directions admissible for the vertical-lift pairings.
Eigen::MatrixXd vertical_tangent_dirs(const ConstraintSet& constraint, const Eigen::VectorXd& base,
                                      int n, const SolverConfig& cfg) {
  const Eigen::MatrixXd t = constraint.tangent_basis(base, cfg);
  if (t.cols() == 0) return Eigen::MatrixXd(base.size(), 0);
  const Eigen::MatrixXd top = t.topRows(n);
  const Eigen::MatrixXd combos = nullspace(top, cfg.rank_threshold);
  return t * combos;
}

}  // namespace

GeneratingObject pairing_object_lh(int n) {
  ConstraintSet diag;
  diag.ambient_dim = 4 * n;
  diag.defining_dim = n;
  diag.defining = [n](const Eigen::VectorXd& b) {
    return Eigen::VectorXd(b.head(n) - b.segment(2 * n, n));
  };

  FamilyOfFunctions fam;
  fam.base_dim = 4 * n;
  fam.fiber_dim = 0;
  // Coordinates [q (n), p (n) | q' (n), v (n)].
  fam.value = [n](const Eigen::VectorXd& x) {
    return -x.segment(n, n).dot(x.segment(3 * n, n));
  };
  fam.gradient = [n](const Eigen::VectorXd& x) {
    Eigen::VectorXd g = Eigen::VectorXd::Zero(4 * n);
    g.segment(n, n) = -x.segment(3 * n, n);
    g.segment(3 * n, n) = -x.segment(n, n);
    return g;
  };

  GeneratingObject go;
  go.product = true;
  go.side = Side::hamiltonian;
  go.side1 = Side::lagrangian;
  go.config_dim = n;
  go.split = 2 * n;
  go.constraint = std::move(diag);
  go.family = std::move(fam);
  return go;
}

GeneratingObject pairing_object_hl(int n) {
  ConstraintSet diag;
  diag.ambient_dim = 4 * n;
  diag.defining_dim = n;
  diag.defining = [n](const Eigen::VectorXd& b) {
    return Eigen::VectorXd(b.head(n) - b.segment(2 * n, n));
  };

  FamilyOfFunctions fam;
  fam.base_dim = 4 * n;
  fam.fiber_dim = 0;
  // Coordinates [q (n), qdot (n) | q' (n), p (n)].
  fam.value = [n](const Eigen::VectorXd& x) {
    return x.segment(3 * n, n).dot(x.segment(n, n));
  };
  fam.gradient = [n](const Eigen::VectorXd& x) {
    Eigen::VectorXd g = Eigen::VectorXd::Zero(4 * n);
    g.segment(n, n) = x.segment(3 * n, n);
    g.segment(3 * n, n) = x.segment(n, n);
    return g;
  };

  GeneratingObject go;
  go.product = true;
  go.side = Side::lagrangian;
  go.side1 = Side::hamiltonian;
  go.config_dim = n;
  go.split = 2 * n;
  go.constraint = std::move(diag);
  go.family = std::move(fam);
  return go;
}

HamiltonianSystem legendre_transform(const LagrangianSystem& lag) {
  const int n = lag.object.config_dim;
  return HamiltonianSystem{compose(pairing_object_lh(n), lag.object)};
}

LagrangianSystem inverse_legendre(const HamiltonianSystem& ham) {
  const int n = ham.object.config_dim;
  return LagrangianSystem{compose(pairing_object_hl(n), ham.object)};
}

bool lambda1_membership(const LagrangianSystem& lag, const Eigen::VectorXd& p,
                        const Eigen::VectorXd& y_total, const SolverConfig& cfg) {
  const GeneratingObject& go = lag.object;
  const int n = go.config_dim;
  const Eigen::VectorXd base = y_total.head(go.family.base_dim);
  if (!go.constraint.contains(base)) return false;
  if (!go.family.in_domain(y_total)) return false;

  Eigen::VectorXd mult;
  const double res = criticality_residual(go.family, y_total, cfg, &mult);
  if (res > cfg.tolerance) return false;

  CriticalPoint cp{base, y_total.tail(go.family.fiber_dim), mult, res};
  const Eigen::VectorXd kappa = kappa_map(go.family, cp, cfg);

  const Eigen::MatrixXd dirs = vertical_tangent_dirs(go.constraint, base, n, cfg);
  const double scale = std::max({1.0, p.lpNorm<Eigen::Infinity>(), kappa.lpNorm<Eigen::Infinity>()});
  for (Eigen::Index i = 0; i < dirs.cols(); ++i) {
    const Eigen::VectorXd u = dirs.col(i);
    if (std::abs(p.dot(u.tail(n)) - kappa.dot(u)) > cfg.tolerance * scale) return false;
  }
  return true;
}

MembershipResult lambda2_membership(const LagrangianSystem& lag, const Eigen::VectorXd& p,
                                    const Eigen::VectorXd& v_base,
                                    const std::vector<Eigen::VectorXd>& seeds,
                                    const SolverConfig& cfg) {
  const GeneratingObject& go = lag.object;
  const int n = go.config_dim;
  MembershipResult out;
  if (!go.constraint.contains(v_base)) return out;
  const Eigen::MatrixXd dirs = vertical_tangent_dirs(go.constraint, v_base, n, cfg);
  Eigen::VectorXd targets(dirs.cols());
  for (Eigen::Index i = 0; i < dirs.cols(); ++i) targets[i] = p.dot(dirs.col(i).tail(n));
  return directional_membership(go.family, v_base, dirs, targets, seeds, cfg);
}

bool omega1_membership(const HamiltonianSystem& ham, const Eigen::VectorXd& v,
                       const Eigen::VectorXd& z_total, const SolverConfig& cfg) {
  const GeneratingObject& go = ham.object;
  const int n = go.config_dim;
  const Eigen::VectorXd base = z_total.head(go.family.base_dim);
  if (!go.constraint.contains(base)) return false;
  if (!go.family.in_domain(z_total)) return false;

  Eigen::VectorXd mult;
  const double res = criticality_residual(go.family, z_total, cfg, &mult);
  if (res > cfg.tolerance) return false;

  CriticalPoint cp{base, z_total.tail(go.family.fiber_dim), mult, res};
  const Eigen::VectorXd kappa = kappa_map(go.family, cp, cfg);

  const Eigen::MatrixXd dirs = vertical_tangent_dirs(go.constraint, base, n, cfg);
  const double scale = std::max({1.0, v.lpNorm<Eigen::Infinity>(), kappa.lpNorm<Eigen::Infinity>()});
  for (Eigen::Index i = 0; i < dirs.cols(); ++i) {
    const Eigen::VectorXd a = dirs.col(i);
    // <a, v> = <dH, lift(a)> with the family storing -H.
    if (std::abs(a.tail(n).dot(v) + kappa.dot(a)) > cfg.tolerance * scale) return false;
  }
  return true;
}

MembershipResult omega2_membership(const HamiltonianSystem& ham, const Eigen::VectorXd& v,
                                   const Eigen::VectorXd& p_base,
                                   const std::vector<Eigen::VectorXd>& seeds,
                                   const SolverConfig& cfg) {
  const GeneratingObject& go = ham.object;
  const int n = go.config_dim;
  MembershipResult out;
  if (!go.constraint.contains(p_base)) return out;
  const Eigen::MatrixXd dirs = vertical_tangent_dirs(go.constraint, p_base, n, cfg);
  Eigen::VectorXd targets(dirs.cols());
  for (Eigen::Index i = 0; i < dirs.cols(); ++i) targets[i] = -dirs.col(i).tail(n).dot(v);
  return directional_membership(go.family, p_base, dirs, targets, seeds, cfg);
}

bool hyperregular_at(const LagrangianSystem& lag, const Eigen::VectorXd& base,
                     const Eigen::VectorXd& fiber_seed, const SolverConfig& cfg) {
  const GeneratingObject& go = lag.object;
  const int n = go.config_dim;

  auto momentum = [&](const Eigen::VectorXd& b) -> std::optional<Eigen::VectorXd> {
    if (!go.constraint.contains(b) || (go.family.fiber_dim == 0 && !go.family.in_domain(b)))
      return std::nullopt;
    CriticalPoint cp;
    if (go.family.fiber_dim > 0) {
      auto solved = solve_critical(go.family, b, fiber_seed, cfg);
      if (!solved) return std::nullopt;
      // Stationarity residuals that merely vanish asymptotically (e.g. a
      // 1/u^2 tail) let the solver pseudo-converge at huge fiber values; a
      // witness that flees the data scale is no witness.
      const double scale = 1.0 + fiber_seed.lpNorm<Eigen::Infinity>() +
                           b.lpNorm<Eigen::Infinity>();
      if (solved->fiber.lpNorm<Eigen::Infinity>() > 10.0 * scale) return std::nullopt;
      cp = *solved;
    } else {
      cp.base = b;
      cp.fiber = Eigen::VectorXd(0);
      cp.residual = criticality_residual(go.family, b, cfg, &cp.multipliers);
      if (cp.residual > cfg.tolerance) return std::nullopt;
    }
    return Eigen::VectorXd(kappa_map(go.family, cp, cfg).tail(n));
  };

  Eigen::MatrixXd jac(n, n);
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXd hi = base, lo = base;
    const double h = cfg.fd_step * std::max(1.0, std::abs(base[n + j]));
    hi[n + j] += h;
    lo[n + j] -= h;
    const auto phi = momentum(hi);
    const auto plo = momentum(lo);
    if (!phi || !plo) return false;
    jac.col(j) = (*phi - *plo) / (2.0 * h);
  }
  return numerical_rank(jac, cfg.rank_threshold) == n;
}

}  // namespace genfam
