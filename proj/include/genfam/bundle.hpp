#pragma once

#include "genfam/minkowski.hpp"

namespace genfam {

// Iterated bundles over affine Q, all identified with coordinate products:
//   TQ      = Q x V              (q, qdot)
//   T*Q     = Q x V*             (q, p)
//   TT*Q    = Q x V* x V x V*    (q, p, qdot, pdot)
//   T(TT*Q) = ... x variations   (q, p, qdot, pdot, dq, dp, dqdot, dpdot)
//   TTQ     = Q x V x V x V      (q, v, qdot, vdot)

struct TQPoint {
  Point q;
  Vector qdot;
};

struct TStarQPoint {
  Point q;
  Covector p;
};

struct TTStarQPoint {
  Point q;
  Covector p;
  Vector qdot;
  Covector pdot;
};

struct TTTStarQPoint {
  Point q;
  Covector p;
  Vector qdot;
  Covector pdot;
  Vector dq;
  Covector dp;
  Vector dqdot;
  Covector dpdot;
};

struct TTQPoint {
  Point q;
  Vector v;
  Vector qdot;
  Vector vdot;
};

// Covector on TQ at (q, qdot): <., (dq, dqdot)> = <a, dq> + <b, dqdot>.
struct TStarTQPoint {
  Point q;
  Vector qdot;
  Covector a;
  Covector b;
};

// Covector on T*Q at (q, p): <., (dq, dp)> = <a, dq> + <dp, b>.
struct TStarTStarQPoint {
  Point q;
  Covector p;
  Covector a;
  Vector b;
};

// <pdot, dq> + <p, dqdot>
double eval_dT_theta(const TTTStarQPoint& x);
// <pdot, dq> - <dp, qdot>
double eval_iT_dtheta(const TTTStarQPoint& x);

// Vector fibration isomorphism TT*Q -> T*TQ, fixed by
// <alpha_Q(w), (dq, dqdot)> = eval_dT_theta.
TStarTQPoint alpha_Q(const TTStarQPoint& w);
TTStarQPoint alpha_Q_inv(const TStarTQPoint& s);

// TT*Q -> T*T*Q, fixed by <beta(w), (dq, dp)> = eval_iT_dtheta.
TStarTStarQPoint beta(const TTStarQPoint& w);

double pair_TStarTQ(const TStarTQPoint& s, const Vector& dq, const Vector& dqdot);
double pair_TStarTStarQ(const TStarTStarQPoint& s, const Vector& dq, const Covector& dp);

// Canonical involution of TTQ: swaps the two middle slots.
TTQPoint kappa_Q(const TTQPoint& u);

// Vertical lifts (tangent at s=0 of gamma(s) = fiber point + s * increment).
// Throws std::invalid_argument when base points differ.
TTQPoint chi_TQ(const TQPoint& v, const TQPoint& vprime);
TTStarQPoint chi_TStarQ(const TStarQPoint& p, const TStarQPoint& pprime);

}  // namespace genfam
