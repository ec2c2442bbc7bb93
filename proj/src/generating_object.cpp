#include "genfam/generating_object.hpp"

#include <cmath>

namespace genfam {

namespace {

Eigen::VectorXd join(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  Eigen::VectorXd out(a.size() + b.size());
  out << a, b;
  return out;
}

Eigen::VectorXd zeros(Eigen::Index n) { return Eigen::VectorXd::Zero(n); }

}  // namespace

ConstraintSet ConstraintSet::open(int ambient_dim) {
  ConstraintSet c;
  c.ambient_dim = ambient_dim;
  return c;
}

Eigen::MatrixXd ConstraintSet::tangent_basis(const Eigen::VectorXd& x,
                                             const SolverConfig& cfg) const {
  if (!defining) return Eigen::MatrixXd::Identity(ambient_dim, ambient_dim);
  return nullspace(fd_jacobian(defining, x, cfg.fd_step), cfg.rank_threshold);
}

Eigen::VectorXd phase_base(Side side, const TTStarQPoint& w) {
  return side == Side::lagrangian ? join(w.q.coords, w.qdot.coords)
                                  : join(w.q.coords, w.p.coords);
}

double theta_pairing(Side side, const TTStarQPoint& w, const Eigen::VectorXd& t) {
  const Eigen::Index n = w.q.coords.size();
  if (t.size() != 2 * n) throw std::invalid_argument("theta_pairing: variation length mismatch");
  TTTStarQPoint x{w.q,          w.p,          w.qdot,       w.pdot,
                  Vector{zeros(n)}, Covector{zeros(n)}, Vector{zeros(n)}, Covector{zeros(n)}};
  if (side == Side::lagrangian) {
    x.dq.coords = t.head(n);
    x.dqdot.coords = t.tail(n);
    return eval_dT_theta(x);
  }
  x.dq.coords = t.head(n);
  x.dp.coords = t.tail(n);
  return eval_iT_dtheta(x);
}

Eigen::VectorXd phase_base(const GeneratingObject& go, const DynamicsCandidate& w) {
  if (!go.product) return phase_base(go.side, w.w2);
  if (!w.w1) throw std::invalid_argument("phase_base: product object needs a candidate pair");
  return join(phase_base(go.side, w.w2), phase_base(go.side1, *w.w1));
}

double theta_pairing(const GeneratingObject& go, const DynamicsCandidate& w,
                     const Eigen::VectorXd& t) {
  if (!go.product) return theta_pairing(go.side, go.product ? w.w2 : w.w2, t);
  // theta_2 (-) theta_1 on the product.
  return theta_pairing(go.side, w.w2, t.head(go.split)) -
         theta_pairing(go.side1, *w.w1, t.tail(t.size() - go.split));
}

MembershipResult a_membership(const GeneratingObject& go, const DynamicsCandidate& w,
                              const std::vector<Eigen::VectorXd>& seeds,
                              const SolverConfig& cfg) {
  const Eigen::VectorXd b = phase_base(go, w);
  MembershipResult out;
  if (!go.constraint.contains(b)) return out;
  const Eigen::MatrixXd dirs = go.constraint.tangent_basis(b, cfg);
  Eigen::VectorXd targets(dirs.cols());
  for (Eigen::Index i = 0; i < dirs.cols(); ++i)
    targets[i] = theta_pairing(go, w, dirs.col(i));
  return directional_membership(go.family, b, dirs, targets, seeds, cfg);
}

MembershipResult a_membership(const GeneratingObject& go, const TTStarQPoint& w,
                              const std::vector<Eigen::VectorXd>& seeds,
                              const SolverConfig& cfg) {
  return a_membership(go, DynamicsCandidate{w, std::nullopt}, seeds, cfg);
}

GeneratingObject compose(const GeneratingObject& go21, const GeneratingObject& go1,
                         ConstraintSet result_constraint) {
  if (!go21.product) throw std::invalid_argument("compose: go21 must be product-side");
  if (go1.product) throw std::invalid_argument("compose: use compose_relations for two relations");
  if (go21.side1 != go1.side)
    throw std::invalid_argument("compose: factor-1 side of go21 does not match go1");
  const int n2 = go21.split;
  const int n1 = go21.family.base_dim - n2;
  if (n1 != go1.family.base_dim) throw std::invalid_argument("compose: base dimension mismatch");
  const int f21 = go21.family.fiber_dim;
  const int f1 = go1.family.fiber_dim;

  const FamilyOfFunctions fam21 = go21.family;
  const FamilyOfFunctions fam1 = go1.family;
  const ConstraintSet x21 = go21.constraint;
  const ConstraintSet x1 = go1.constraint;

  // Composed total coordinates: [b2 (n2) | q1 (n1) | u21 (f21) | u1 (f1)].
  auto part21 = [n2, n1, f21](const Eigen::VectorXd& x) { return x.head(n2 + n1 + f21); };
  auto part1 = [n2, n1, f1](const Eigen::VectorXd& x) {
    Eigen::VectorXd y(n1 + f1);
    y << x.segment(n2, n1), x.tail(f1);
    return y;
  };

  FamilyOfFunctions fam;
  fam.base_dim = n2;
  fam.fiber_dim = n1 + f21 + f1;
  fam.value = [fam21, fam1, part21, part1](const Eigen::VectorXd& x) {
    return fam21.value(part21(x)) + fam1.value(part1(x));
  };
  if (fam21.gradient && fam1.gradient) {
    fam.gradient = [fam21, fam1, part21, part1, n2, n1, f21, f1](const Eigen::VectorXd& x) {
      Eigen::VectorXd g = Eigen::VectorXd::Zero(x.size());
      g.head(n2 + n1 + f21) += fam21.gradient(part21(x));
      const Eigen::VectorXd g1 = fam1.gradient(part1(x));
      g.segment(n2, n1) += g1.head(n1);
      g.tail(f1) += g1.tail(f1);
      return g;
    };
  }
  fam.domain = [fam21, fam1, x21, x1, part21, part1, n2, n1](const Eigen::VectorXd& x) {
    const Eigen::VectorXd b21 = x.head(n2 + n1);
    if (!x21.contains(b21)) return false;
    if (!x1.contains(x.segment(n2, n1))) return false;
    return fam21.in_domain(part21(x)) && fam1.in_domain(part1(x));
  };
  const int m = x21.defining_dim + x1.defining_dim + fam21.constraint_dim + fam1.constraint_dim;
  if (m > 0) {
    fam.constraint_dim = m;
    fam.constraint = [x21, x1, fam21, fam1, part21, part1, n2, n1,
                      m](const Eigen::VectorXd& x) {
      Eigen::VectorXd g(m);
      Eigen::Index at = 0;
      if (x21.defining) {
        g.segment(at, x21.defining_dim) = x21.defining(x.head(n2 + n1));
        at += x21.defining_dim;
      }
      if (x1.defining) {
        g.segment(at, x1.defining_dim) = x1.defining(x.segment(n2, n1));
        at += x1.defining_dim;
      }
      if (fam21.constraint) {
        g.segment(at, fam21.constraint_dim) = fam21.constraint(part21(x));
        at += fam21.constraint_dim;
      }
      if (fam1.constraint) g.segment(at, fam1.constraint_dim) = fam1.constraint(part1(x));
      return g;
    };
  }

  GeneratingObject out;
  out.side = go21.side;
  out.config_dim = go1.config_dim;
  out.constraint = result_constraint.ambient_dim > 0 ? std::move(result_constraint)
                                                     : ConstraintSet::open(n2);
  out.family = std::move(fam);
  return out;
}

GeneratingObject compose_relations(const GeneratingObject& go_a, const GeneratingObject& go_b,
                                   ConstraintSet result_constraint) {
  if (!go_a.product || !go_b.product)
    throw std::invalid_argument("compose_relations: both objects must be product-side");
  if (go_a.side1 != go_b.side)
    throw std::invalid_argument("compose_relations: middle sides do not match");
  const int na2 = go_a.split;
  const int na1 = go_a.family.base_dim - na2;
  const int nb1 = go_b.split;
  const int n0 = go_b.family.base_dim - nb1;
  if (na1 != nb1) throw std::invalid_argument("compose_relations: middle dimension mismatch");
  const int fa = go_a.family.fiber_dim;
  const int fb = go_b.family.fiber_dim;

  const FamilyOfFunctions fama = go_a.family;
  const FamilyOfFunctions famb = go_b.family;
  const ConstraintSet xa = go_a.constraint;
  const ConstraintSet xb = go_b.constraint;

  // Result coordinates: [q2 (na2) | q0 (n0) | q1 (na1) | ua (fa) | ub (fb)].
  auto part_a = [na2, n0, na1, fa](const Eigen::VectorXd& x) {
    Eigen::VectorXd y(na2 + na1 + fa);
    y << x.head(na2), x.segment(na2 + n0, na1), x.segment(na2 + n0 + na1, fa);
    return y;
  };
  auto part_b = [na2, n0, na1, fa, fb](const Eigen::VectorXd& x) {
    Eigen::VectorXd y(na1 + n0 + fb);
    y << x.segment(na2 + n0, na1), x.segment(na2, n0), x.tail(fb);
    return y;
  };

  FamilyOfFunctions fam;
  fam.base_dim = na2 + n0;
  fam.fiber_dim = na1 + fa + fb;
  fam.value = [fama, famb, part_a, part_b](const Eigen::VectorXd& x) {
    return fama.value(part_a(x)) + famb.value(part_b(x));
  };
  if (fama.gradient && famb.gradient) {
    fam.gradient = [fama, famb, part_a, part_b, na2, n0, na1, fa,
                    fb](const Eigen::VectorXd& x) {
      Eigen::VectorXd g = Eigen::VectorXd::Zero(x.size());
      const Eigen::VectorXd ga = fama.gradient(part_a(x));
      g.head(na2) += ga.head(na2);
      g.segment(na2 + n0, na1) += ga.segment(na2, na1);
      g.segment(na2 + n0 + na1, fa) += ga.tail(fa);
      const Eigen::VectorXd gb = famb.gradient(part_b(x));
      g.segment(na2 + n0, na1) += gb.head(na1);
      g.segment(na2, n0) += gb.segment(na1, n0);
      g.tail(fb) += gb.tail(fb);
      return g;
    };
  }
  fam.domain = [fama, famb, xa, xb, part_a, part_b](const Eigen::VectorXd& x) {
    const Eigen::VectorXd ya = part_a(x);
    const Eigen::VectorXd yb = part_b(x);
    if (!xa.contains(ya.head(xa.ambient_dim))) return false;
    if (!xb.contains(yb.head(xb.ambient_dim))) return false;
    return fama.in_domain(ya) && famb.in_domain(yb);
  };
  const int m = xa.defining_dim + xb.defining_dim + fama.constraint_dim + famb.constraint_dim;
  if (m > 0) {
    fam.constraint_dim = m;
    fam.constraint = [xa, xb, fama, famb, part_a, part_b, m](const Eigen::VectorXd& x) {
      const Eigen::VectorXd ya = part_a(x);
      const Eigen::VectorXd yb = part_b(x);
      Eigen::VectorXd g(m);
      Eigen::Index at = 0;
      if (xa.defining) {
        g.segment(at, xa.defining_dim) = xa.defining(ya.head(xa.ambient_dim));
        at += xa.defining_dim;
      }
      if (xb.defining) {
        g.segment(at, xb.defining_dim) = xb.defining(yb.head(xb.ambient_dim));
        at += xb.defining_dim;
      }
      if (fama.constraint) {
        g.segment(at, fama.constraint_dim) = fama.constraint(ya);
        at += fama.constraint_dim;
      }
      if (famb.constraint) g.segment(at, famb.constraint_dim) = famb.constraint(yb);
      return g;
    };
  }

  GeneratingObject out;
  out.product = true;
  out.side = go_a.side;
  out.side1 = go_b.side1;
  out.split = na2;
  out.config_dim = go_a.config_dim;
  out.constraint = result_constraint.ambient_dim > 0 ? std::move(result_constraint)
                                                     : ConstraintSet::open(na2 + n0);
  out.family = std::move(fam);
  return out;
}

GeneratingObject reduce_by_section(const GeneratingObject& go, const SectionSpec& spec,
                                   const std::vector<Eigen::VectorXd>& reduced_samples,
                                   const SolverConfig& cfg) {
  const FamilyOfFunctions fam = go.family;
  double worst = 0.0;
  for (const auto& xr : reduced_samples) {
    const Eigen::VectorXd t = spec.section(xr);
    if (!fam.in_domain(t))
      throw VerificationError("reduce_by_section: section leaves the family domain", 0.0);
    const Eigen::VectorXd back = spec.rho_prime(t);
    if ((back - xr).lpNorm<Eigen::Infinity>() > 1e-8)
      throw VerificationError("reduce_by_section: rho_prime o section is not the identity",
                              (back - xr).lpNorm<Eigen::Infinity>());
    // Stationarity along the fibres of rho_prime, inside the constraint set.
    Eigen::MatrixXd stacked(0, t.size());
    const Eigen::MatrixXd jr = fd_jacobian(spec.rho_prime, t, cfg.fd_step);
    stacked = jr;
    if (fam.constraint) {
      const Eigen::MatrixXd jg = fam.constraint_jacobian(t, cfg);
      Eigen::MatrixXd both(jr.rows() + jg.rows(), t.size());
      both << jr, jg;
      stacked = both;
      const double gviol = fam.constraint(t).lpNorm<Eigen::Infinity>();
      worst = std::max(worst, gviol);
    }
    const Eigen::MatrixXd v = nullspace(stacked, cfg.rank_threshold);
    if (v.cols() > 0) {
      const double res = (v.transpose() * fam.grad(t, cfg)).lpNorm<Eigen::Infinity>();
      worst = std::max(worst, res);
    }
  }
  if (worst > cfg.tolerance)
    throw VerificationError("reduce_by_section: section is not critical", worst);

  FamilyOfFunctions reduced;
  reduced.base_dim = fam.base_dim;
  reduced.fiber_dim = spec.reduced_fiber_dim;
  const VectorFn section = spec.section;
  reduced.value = [fam, section](const Eigen::VectorXd& x) { return fam.value(section(x)); };
  if (spec.reduced_domain) {
    reduced.domain = spec.reduced_domain;
  } else {
    reduced.domain = [fam, section](const Eigen::VectorXd& x) {
      return fam.in_domain(section(x));
    };
  }

  GeneratingObject out = go;
  out.family = std::move(reduced);
  return out;
}

GeneratingObject reduce_by_fibration(const GeneratingObject& go, const ConstraintSet& reduced_x,
                                     std::function<Eigen::VectorXd(const Eigen::VectorXd&, double)>
                                         critical_lift,
                                     const std::vector<double>& fiber_params,
                                     const std::vector<Eigen::VectorXd>& base_samples,
                                     const SolverConfig& cfg) {
  if (fiber_params.empty())
    throw std::invalid_argument("reduce_by_fibration: needs at least one fiber parameter");
  const FamilyOfFunctions fam = go.family;
  double worst = 0.0;
  for (const auto& b : base_samples) {
    if (!reduced_x.contains(b))
      throw VerificationError("reduce_by_fibration: sample base off the reduced constraint", 0.0);
    double fmin = std::numeric_limits<double>::infinity();
    double fmax = -std::numeric_limits<double>::infinity();
    for (double t : fiber_params) {
      const Eigen::VectorXd x = critical_lift(b, t);
      if (!fam.in_domain(x))
        throw VerificationError("reduce_by_fibration: lift leaves the family domain", 0.0);
      worst = std::max(worst, criticality_residual(fam, x, cfg));
      const double val = fam.value(x);
      fmin = std::min(fmin, val);
      fmax = std::max(fmax, val);
    }
    worst = std::max(worst, fmax - fmin);
  }
  if (worst > cfg.tolerance)
    throw VerificationError("reduce_by_fibration: lift not critical or F not constant on fibres",
                            worst);

  const double t0 = fiber_params.front();
  FamilyOfFunctions reduced;
  reduced.base_dim = fam.base_dim;
  reduced.fiber_dim = 0;
  reduced.value = [fam, critical_lift, t0](const Eigen::VectorXd& x) {
    return fam.value(critical_lift(x, t0));
  };
  reduced.domain = [fam, critical_lift, t0](const Eigen::VectorXd& x) {
    return fam.in_domain(critical_lift(x, t0));
  };

  GeneratingObject out = go;
  out.constraint = reduced_x;
  out.family = std::move(reduced);
  return out;
}

}  // namespace genfam
