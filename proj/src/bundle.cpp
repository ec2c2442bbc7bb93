#include "genfam/bundle.hpp"

#include <stdexcept>

namespace genfam {

double eval_dT_theta(const TTTStarQPoint& x) {
  return pair(x.pdot, x.dq) + pair(x.p, x.dqdot);
}

double eval_iT_dtheta(const TTTStarQPoint& x) {
  return pair(x.pdot, x.dq) - pair(x.dp, x.qdot);
}

TStarTQPoint alpha_Q(const TTStarQPoint& w) {
  return TStarTQPoint{w.q, w.qdot, w.pdot, w.p};
}

TTStarQPoint alpha_Q_inv(const TStarTQPoint& s) {
  return TTStarQPoint{s.q, s.b, s.qdot, s.a};
}

TStarTStarQPoint beta(const TTStarQPoint& w) {
  return TStarTStarQPoint{w.q, w.p, w.pdot, Vector{-w.qdot.coords}};
}

double pair_TStarTQ(const TStarTQPoint& s, const Vector& dq, const Vector& dqdot) {
  return pair(s.a, dq) + pair(s.b, dqdot);
}

double pair_TStarTStarQ(const TStarTStarQPoint& s, const Vector& dq, const Covector& dp) {
  return pair(s.a, dq) + pair(dp.coords, s.b.coords);
}

TTQPoint kappa_Q(const TTQPoint& u) { return TTQPoint{u.q, u.qdot, u.v, u.vdot}; }

TTQPoint chi_TQ(const TQPoint& v, const TQPoint& vprime) {
  if (v.q.coords.size() != vprime.q.coords.size() ||
      !(v.q.coords - vprime.q.coords).isZero(0.0))
    throw std::invalid_argument("chi_TQ: base points differ");
  return TTQPoint{v.q, v.qdot, Vector{Eigen::VectorXd::Zero(v.q.coords.size())}, vprime.qdot};
}

TTStarQPoint chi_TStarQ(const TStarQPoint& p, const TStarQPoint& pprime) {
  if (p.q.coords.size() != pprime.q.coords.size() ||
      !(p.q.coords - pprime.q.coords).isZero(0.0))
    throw std::invalid_argument("chi_TStarQ: base points differ");
  return TTStarQPoint{p.q, p.p, Vector{Eigen::VectorXd::Zero(p.q.coords.size())}, pprime.p};
}

}  // namespace genfam
