#include "genfam/family.hpp"

#include <cmath>
#include <stdexcept>

namespace genfam {

namespace {

Eigen::VectorXd join(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  Eigen::VectorXd out(a.size() + b.size());
  out << a, b;
  return out;
}

// Least-squares multipliers for the fiber-block stationarity equations.
Eigen::VectorXd estimate_multipliers(const Eigen::MatrixXd& gu_fiber,
                                     const Eigen::VectorXd& grad_fiber) {
  if (gu_fiber.rows() == 0) return Eigen::VectorXd(0);
  return gu_fiber.transpose().colPivHouseholderQr().solve(-grad_fiber);
}

struct StationarityParts {
  Eigen::VectorXd grad;      // full gradient of F
  Eigen::MatrixXd gjac;      // constraint Jacobian (m x total)
  Eigen::VectorXd gval;      // constraint values
};

StationarityParts eval_parts(const FamilyOfFunctions& fam, const Eigen::VectorXd& x,
                             const SolverConfig& cfg) {
  StationarityParts p;
  p.grad = fam.grad(x, cfg);
  if (fam.constraint) {
    p.gval = fam.constraint(x);
    p.gjac = fam.constraint_jacobian(x, cfg);
  } else {
    p.gval = Eigen::VectorXd(0);
    p.gjac = Eigen::MatrixXd(0, fam.total_dim());
  }
  return p;
}

// Shared damped (Gauss-)Newton loop. `residual` maps the unknown vector to a
// residual; `admissible` rejects iterates whose total point leaves the domain.
struct IterationResult {
  bool converged = false;
  Eigen::VectorXd s;
  double residual_norm = std::numeric_limits<double>::infinity();
};

IterationResult damped_newton(const VectorFn& residual,
                              const std::function<bool(const Eigen::VectorXd&)>& admissible,
                              Eigen::VectorXd s, const SolverConfig& cfg) {
  IterationResult out;
  if (!admissible(s)) return out;
  Eigen::VectorXd r = residual(s);
  double rnorm = r.norm();
  for (int it = 0; it < cfg.max_iterations; ++it) {
    if (r.lpNorm<Eigen::Infinity>() <= cfg.tolerance) {
      out.converged = true;
      break;
    }
    const Eigen::MatrixXd j = fd_jacobian(residual, s, cfg.jac_step);
    const Eigen::VectorXd step = j.colPivHouseholderQr().solve(-r);
    if (!step.allFinite()) break;
    double t = 1.0;
    bool accepted = false;
    for (int bt = 0; bt <= cfg.max_backtracks; ++bt) {
      const Eigen::VectorXd cand = s + t * step;
      if (admissible(cand)) {
        const Eigen::VectorXd rc = residual(cand);
        if (rc.norm() < rnorm || rc.lpNorm<Eigen::Infinity>() <= cfg.tolerance) {
          s = cand;
          r = rc;
          rnorm = rc.norm();
          accepted = true;
          break;
        }
      }
      t *= 0.5;
    }
    if (!accepted) break;
  }
  out.s = s;
  out.residual_norm = r.lpNorm<Eigen::Infinity>();
  if (r.lpNorm<Eigen::Infinity>() <= cfg.tolerance) out.converged = true;
  return out;
}

}  // namespace

Eigen::VectorXd FamilyOfFunctions::grad(const Eigen::VectorXd& x, const SolverConfig& cfg) const {
  if (gradient) return gradient(x);
  return fd_gradient(value, x, cfg.fd_step);
}

Eigen::MatrixXd FamilyOfFunctions::hess(const Eigen::VectorXd& x, const SolverConfig& cfg) const {
  if (hessian) return hessian(x);
  if (gradient) return fd_jacobian(gradient, x, cfg.fd_step);
  return fd_hessian(value, x, cfg.hess_step);
}

Eigen::MatrixXd FamilyOfFunctions::constraint_jacobian(const Eigen::VectorXd& x,
                                                       const SolverConfig& cfg) const {
  if (!constraint) return Eigen::MatrixXd(0, total_dim());
  return fd_jacobian(constraint, x, cfg.fd_step);
}

Eigen::VectorXd CriticalPoint::total() const {
  Eigen::VectorXd x(base.size() + fiber.size());
  x << base, fiber;
  return x;
}

Eigen::VectorXd vertical_gradient(const FamilyOfFunctions& fam, const Eigen::VectorXd& total,
                                  const SolverConfig& cfg) {
  if (total.size() != fam.total_dim())
    throw std::invalid_argument("vertical_gradient: coordinate length mismatch");
  if (!fam.in_domain(total)) throw std::domain_error("vertical_gradient: point outside domain");
  return fam.grad(total, cfg).tail(fam.fiber_dim);
}

double criticality_residual(const FamilyOfFunctions& fam, const Eigen::VectorXd& total,
                            const SolverConfig& cfg, Eigen::VectorXd* multipliers_out) {
  if (!fam.in_domain(total)) throw std::domain_error("criticality_residual: outside domain");
  const StationarityParts p = eval_parts(fam, total, cfg);
  const Eigen::VectorXd gu = p.grad.tail(fam.fiber_dim);
  const Eigen::MatrixXd ju = p.gjac.rightCols(fam.fiber_dim);
  const Eigen::VectorXd lambda = estimate_multipliers(ju, gu);
  if (multipliers_out) *multipliers_out = lambda;
  const Eigen::MatrixXd v = nullspace(ju, cfg.rank_threshold);
  double res = p.gval.size() ? p.gval.lpNorm<Eigen::Infinity>() : 0.0;
  if (v.cols() > 0 && fam.fiber_dim > 0)
    res = std::max(res, (v.transpose() * gu).lpNorm<Eigen::Infinity>());
  return res;
}

std::optional<CriticalPoint> solve_critical(const FamilyOfFunctions& fam,
                                            const Eigen::VectorXd& base,
                                            const Eigen::VectorXd& fiber_seed,
                                            const SolverConfig& cfg) {
  const int f = fam.fiber_dim;
  const int m = fam.constraint_dim;
  if (base.size() != fam.base_dim || fiber_seed.size() != f)
    throw std::invalid_argument("solve_critical: coordinate length mismatch");

  if (f == 0 && m == 0) {
    if (!fam.in_domain(base)) return std::nullopt;
    return CriticalPoint{base, fiber_seed, Eigen::VectorXd(0), 0.0};
  }

  auto total_of = [&](const Eigen::VectorXd& s) { return join(base, s.head(f)); };
  auto admissible = [&](const Eigen::VectorXd& s) { return fam.in_domain(total_of(s)); };
  auto residual = [&](const Eigen::VectorXd& s) -> Eigen::VectorXd {
    const Eigen::VectorXd x = total_of(s);
    const StationarityParts p = eval_parts(fam, x, cfg);
    Eigen::VectorXd r(f + m);
    r.head(f) = p.grad.tail(f);
    if (m > 0) {
      r.head(f) += p.gjac.rightCols(f).transpose() * s.tail(m);
      r.tail(m) = p.gval;
    }
    return r;
  };

  Eigen::VectorXd s0(f + m);
  s0.head(f) = fiber_seed;
  if (m > 0) {
    const Eigen::VectorXd x = join(base, fiber_seed);
    if (!fam.in_domain(x)) return std::nullopt;
    const StationarityParts p = eval_parts(fam, x, cfg);
    s0.tail(m) = estimate_multipliers(p.gjac.rightCols(f), p.grad.tail(f));
  }

  const IterationResult it = damped_newton(residual, admissible, s0, cfg);
  if (!it.converged) return std::nullopt;
  return CriticalPoint{base, it.s.head(f), it.s.tail(m), it.residual_norm};
}

Eigen::MatrixXd w_matrix(const FamilyOfFunctions& fam, const CriticalPoint& cp,
                         const SolverConfig& cfg) {
  const Eigen::VectorXd x = cp.total();
  if (criticality_residual(fam, x, cfg) > std::max(cfg.tolerance * 100.0, cp.residual * 10.0))
    throw std::logic_error("w_matrix: point is not critical");

  Eigen::MatrixXd h = fam.hess(x, cfg);
  Eigen::MatrixXd vert;   // total_dim x nv, vertical tangents
  Eigen::MatrixXd tang;   // total_dim x nt, all tangents
  const int n = fam.base_dim, f = fam.fiber_dim;
  if (fam.constraint) {
    const Eigen::MatrixXd gj = fam.constraint_jacobian(x, cfg);
    // Hessian of lambda^T G added to the Hessian of F.
    const Eigen::VectorXd lambda = cp.multipliers.size()
                                       ? cp.multipliers
                                       : estimate_multipliers(gj.rightCols(f),
                                                              fam.grad(x, cfg).tail(f));
    ScalarFn lg = [&fam, lambda](const Eigen::VectorXd& y) {
      return lambda.dot(fam.constraint(y));
    };
    h += fd_hessian(lg, x, cfg.hess_step);
    const Eigen::MatrixXd vf = nullspace(gj.rightCols(f), cfg.rank_threshold);
    vert = Eigen::MatrixXd::Zero(n + f, vf.cols());
    vert.bottomRows(f) = vf;
    tang = nullspace(gj, cfg.rank_threshold);
  } else {
    vert = Eigen::MatrixXd::Zero(n + f, f);
    vert.bottomRows(f).setIdentity();
    tang = Eigen::MatrixXd::Identity(n + f, n + f);
  }
  return vert.transpose() * h * tang;
}

Classification classify_at(const FamilyOfFunctions& fam, const CriticalPoint& cp,
                           const SolverConfig& cfg) {
  const Eigen::MatrixXd w = w_matrix(fam, cp, cfg);
  Classification c;
  c.rank = numerical_rank(w, cfg.rank_threshold);
  c.morse_at_point = (c.rank == w.rows());
  return c;
}

Eigen::VectorXd kappa_map(const FamilyOfFunctions& fam, const CriticalPoint& cp,
                          const SolverConfig& cfg) {
  const Eigen::VectorXd x = cp.total();
  Eigen::VectorXd lambda;
  const double res = criticality_residual(fam, x, cfg, &lambda);
  if (res > std::max(cfg.tolerance * 100.0, cp.residual * 10.0))
    throw std::logic_error("kappa_map: point is not critical");
  Eigen::VectorXd k = fam.grad(x, cfg).head(fam.base_dim);
  if (fam.constraint) {
    const Eigen::VectorXd l = cp.multipliers.size() ? cp.multipliers : lambda;
    k += fam.constraint_jacobian(x, cfg).leftCols(fam.base_dim).transpose() * l;
  }
  return k;
}

MembershipResult n_membership(const FamilyOfFunctions& fam, const Eigen::VectorXd& base,
                              const Eigen::VectorXd& covector,
                              const std::vector<Eigen::VectorXd>& seeds,
                              const SolverConfig& cfg) {
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(fam.base_dim, fam.base_dim);
  return directional_membership(fam, base, id, covector, seeds, cfg);
}

MembershipResult directional_membership(const FamilyOfFunctions& fam, const Eigen::VectorXd& base,
                                        const Eigen::MatrixXd& dirs, const Eigen::VectorXd& targets,
                                        const std::vector<Eigen::VectorXd>& seeds,
                                        const SolverConfig& cfg) {
  if (dirs.rows() != fam.base_dim || dirs.cols() != targets.size())
    throw std::invalid_argument("directional_membership: direction/target shape mismatch");
  MembershipResult out;
  const int f = fam.fiber_dim;
  const int m = fam.constraint_dim;
  const int k = static_cast<int>(dirs.cols());

  if (f == 0 && m == 0) {
    out.seeds_tried = 1;
    if (!fam.in_domain(base)) return out;
    const Eigen::VectorXd kap = fam.grad(base, cfg);
    out.best_residual = (dirs.transpose() * kap - targets).lpNorm<Eigen::Infinity>();
    if (out.best_residual <= cfg.tolerance) {
      out.member = true;
      out.witness = CriticalPoint{base, Eigen::VectorXd(0), Eigen::VectorXd(0), 0.0};
    }
    return out;
  }

  auto total_of = [&](const Eigen::VectorXd& s) -> Eigen::VectorXd {
    Eigen::VectorXd x(fam.base_dim + f);
    x << base, s.head(f);
    return x;
  };
  auto admissible = [&](const Eigen::VectorXd& s) { return fam.in_domain(total_of(s)); };
  auto residual = [&](const Eigen::VectorXd& s) -> Eigen::VectorXd {
    const Eigen::VectorXd x = total_of(s);
    const StationarityParts p = eval_parts(fam, x, cfg);
    Eigen::VectorXd r(f + m + k);
    r.head(f) = p.grad.tail(f);
    Eigen::VectorXd kap = p.grad.head(fam.base_dim);
    if (m > 0) {
      const Eigen::VectorXd lambda = s.tail(m);
      r.head(f) += p.gjac.rightCols(f).transpose() * lambda;
      r.segment(f, m) = p.gval;
      kap += p.gjac.leftCols(fam.base_dim).transpose() * lambda;
    }
    r.tail(k) = dirs.transpose() * kap - targets;
    return r;
  };

  std::vector<Eigen::VectorXd> use_seeds = seeds;
  if (use_seeds.empty()) use_seeds.push_back(Eigen::VectorXd::Zero(f));
  for (const auto& seed : use_seeds) {
    if (seed.size() != f)
      throw std::invalid_argument("directional_membership: seed length mismatch");
    ++out.seeds_tried;
    Eigen::VectorXd s0(f + m);
    s0.head(f) = seed;
    if (m > 0) {
      const Eigen::VectorXd x = total_of(s0);
      if (!fam.in_domain(x)) continue;
      const StationarityParts p = eval_parts(fam, x, cfg);
      s0.tail(m) = estimate_multipliers(p.gjac.rightCols(f), p.grad.tail(f));
    }
    const IterationResult it = damped_newton(residual, admissible, s0, cfg);
    out.best_residual = std::min(out.best_residual, it.residual_norm);
    if (it.converged) {
      out.member = true;
      out.witness = CriticalPoint{base, it.s.head(f), it.s.tail(m), it.residual_norm};
      return out;
    }
  }
  return out;
}

}  // namespace genfam
