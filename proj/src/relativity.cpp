#include "genfam/relativity.hpp"

#include <cmath>
#include <cstdint>

namespace genfam {

namespace {

double qf(const MinkowskiSpace& s, const Eigen::VectorXd& v) {
  return s.quadratic_form(Vector{v});
}

double co_qf(const MinkowskiSpace& s, const Eigen::VectorXd& p) {
  return s.co_quadratic_form(Covector{p});
}

Eigen::VectorXd g_apply(const MinkowskiSpace& s, const Eigen::VectorXd& v) {
  return s.metric_apply(Vector{v}).coords;
}

Eigen::VectorXd g_inv(const MinkowskiSpace& s, const Eigen::VectorXd& p) {
  return s.metric_inverse_apply(Covector{p}).coords;
}

// Section criticality is verified with finite-difference kernels, which floor
// the achievable residual near 1e-10; the reduced family values themselves
// are exact compositions.
SolverConfig verification_config(const SolverConfig& cfg) {
  SolverConfig v = cfg;
  v.tolerance = std::max(cfg.tolerance, 1e-8);
  return v;
}

LagrangianSystem particle_lagrangian(const ParticleModel& model) {
  const MinkowskiSpace s = model.space;
  const int n = s.dim();
  const double m = model.mass;

  ConstraintSet c;
  c.ambient_dim = 2 * n;
  c.predicate = [s, n](const Eigen::VectorXd& b) { return qf(s, b.tail(n)) > 0.0; };

  FamilyOfFunctions fam;
  fam.base_dim = 2 * n;
  fam.fiber_dim = 0;
  fam.domain = c.predicate;
  fam.value = [s, n, m](const Eigen::VectorXd& x) { return m * std::sqrt(qf(s, x.tail(n))); };
  fam.gradient = [s, n, m](const Eigen::VectorXd& x) {
    const Eigen::VectorXd v = x.tail(n);
    Eigen::VectorXd g = Eigen::VectorXd::Zero(2 * n);
    g.tail(n) = m * g_apply(s, v) / std::sqrt(qf(s, v));
    return g;
  };

  GeneratingObject go;
  go.side = Side::lagrangian;
  go.config_dim = n;
  go.constraint = std::move(c);
  go.family = std::move(fam);
  return LagrangianSystem{go};
}

LagrangianSystem optics_lagrangian(const OpticsModel& model) {
  const MinkowskiSpace s = model.space;
  const int n = s.dim();

  ConstraintSet c;
  c.ambient_dim = 2 * n;
  c.predicate = [n](const Eigen::VectorXd& b) { return !b.tail(n).isZero(0.0); };

  FamilyOfFunctions fam;
  fam.base_dim = 2 * n;
  fam.fiber_dim = 1;
  fam.domain = [n](const Eigen::VectorXd& x) {
    return !x.segment(n, n).isZero(0.0) && x[2 * n] > 0.0;
  };
  fam.value = [s, n](const Eigen::VectorXd& x) {
    return qf(s, x.segment(n, n)) / (2.0 * x[2 * n]);
  };
  fam.gradient = [s, n](const Eigen::VectorXd& x) {
    const Eigen::VectorXd v = x.segment(n, n);
    const double mu = x[2 * n];
    Eigen::VectorXd g = Eigen::VectorXd::Zero(2 * n + 1);
    g.segment(n, n) = g_apply(s, v) / mu;
    g[2 * n] = -qf(s, v) / (2.0 * mu * mu);
    return g;
  };

  GeneratingObject go;
  go.side = Side::lagrangian;
  go.config_dim = n;
  go.constraint = std::move(c);
  go.family = std::move(fam);
  return LagrangianSystem{go};
}

// Deterministic verification samples for the section reductions.
std::vector<Eigen::VectorXd> particle_reduced_samples(const MinkowskiSpace& s, int count,
                                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Eigen::VectorXd> out;
  const int n = s.dim();
  for (int i = 0; i < count; ++i) {
    Eigen::VectorXd x(2 * n + 1);
    x.head(n) = random_point(n, rng);
    x.segment(n, n) = random_timelike_covector(s, rng);
    std::uniform_real_distribution<double> u(0.2, 3.0);
    x[2 * n] = u(rng);
    out.push_back(x);
  }
  return out;
}

std::vector<Eigen::VectorXd> optics_reduced_samples(const MinkowskiSpace& s, int count,
                                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Eigen::VectorXd> out;
  const int n = s.dim();
  std::uniform_real_distribution<double> u(0.2, 3.0);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  for (int i = 0; i < count; ++i) {
    Eigen::VectorXd x(2 * n + 1);
    x.head(n) = random_point(n, rng);
    for (int j = 0; j < n; ++j) x[n + j] = coord(rng);
    if (x.segment(n, n).isZero(1e-3)) x[n] = 1.0;
    x[2 * n] = u(rng);
    out.push_back(x);
  }
  return out;
}

}  // namespace

ParticleSystems particle_systems(const ParticleModel& model, const SolverConfig& cfg) {
  const MinkowskiSpace s = model.space;
  const int n = s.dim();
  const double m = model.mass;

  ParticleSystems sys;
  sys.lagrangian = particle_lagrangian(model);
  sys.hamiltonian_full = legendre_transform(sys.lagrangian);

  // Full Hamiltonian total coordinates: [q, p | q', v].
  auto section = [s, n](double sign) {
    return [s, n, sign](const Eigen::VectorXd& x) {
      Eigen::VectorXd t(4 * n);
      const Eigen::VectorXd p = x.segment(n, n);
      t.head(2 * n) = x.head(2 * n);
      t.segment(2 * n, n) = x.head(n);
      t.tail(n) = sign * (x[2 * n] / std::sqrt(co_qf(s, p))) * g_inv(s, p);
      return t;
    };
  };
  SectionSpec plus;
  plus.reduced_fiber_dim = 1;
  plus.section = section(1.0);
  plus.rho_prime = [s, n](const Eigen::VectorXd& t) {
    Eigen::VectorXd r(2 * n + 1);
    r.head(2 * n) = t.head(2 * n);
    r[2 * n] = std::sqrt(qf(s, t.tail(n)));
    return r;
  };
  plus.reduced_domain = [s, n](const Eigen::VectorXd& x) {
    return co_qf(s, x.segment(n, n)) > 0.0 && x[2 * n] > 0.0;
  };
  SectionSpec minus = plus;
  minus.section = section(-1.0);

  const auto samples = particle_reduced_samples(s, 32, 20260823u);
  const SolverConfig vcfg = verification_config(cfg);
  sys.hamiltonian_reduced =
      HamiltonianSystem{reduce_by_section(sys.hamiltonian_full.object, plus, samples, vcfg)};
  sys.hamiltonian_reduced_minus =
      HamiltonianSystem{reduce_by_section(sys.hamiltonian_full.object, minus, samples, vcfg)};

  // Mass shell reduction: the lambda fibre over ||p|| = m.
  ConstraintSet shell;
  shell.ambient_dim = 2 * n;
  shell.defining_dim = 1;
  shell.predicate = [s, n, m](const Eigen::VectorXd& b) {
    const double c = co_qf(s, b.tail(n));
    return c > 0.0 && std::abs(std::sqrt(c) - m) <= 1e-9;
  };
  shell.defining = [s, n, m](const Eigen::VectorXd& b) {
    Eigen::VectorXd g(1);
    g[0] = std::sqrt(co_qf(s, b.tail(n))) - m;
    return g;
  };

  std::mt19937_64 rng(77130521u);
  std::vector<Eigen::VectorXd> shell_samples;
  for (int i = 0; i < 16; ++i) {
    Eigen::VectorXd b(2 * n);
    b.head(n) = random_point(n, rng);
    Eigen::VectorXd p = random_timelike_covector(s, rng);
    b.tail(n) = p * (m / std::sqrt(co_qf(s, p)));
    shell_samples.push_back(b);
  }
  auto lift = [](const Eigen::VectorXd& b, double t) {
    Eigen::VectorXd x(b.size() + 1);
    x << b, t;
    return x;
  };
  sys.dirac = HamiltonianSystem{reduce_by_fibration(sys.hamiltonian_reduced.object, shell, lift,
                                                    {1.0, 0.5, 2.0}, shell_samples, vcfg)};
  return sys;
}

OpticsSystems optics_systems(const OpticsModel& model, const SolverConfig& cfg) {
  const MinkowskiSpace s = model.space;
  const int n = s.dim();

  OpticsSystems sys;
  sys.lagrangian = optics_lagrangian(model);
  sys.hamiltonian_full = legendre_transform(sys.lagrangian);

  // Full Hamiltonian total coordinates: [q, p | q', v, mu].
  SectionSpec spec;
  spec.reduced_fiber_dim = 1;
  spec.section = [s, n](const Eigen::VectorXd& x) {
    Eigen::VectorXd t(4 * n + 1);
    t.head(2 * n) = x.head(2 * n);
    t.segment(2 * n, n) = x.head(n);
    t.segment(3 * n, n) = x[2 * n] * g_inv(s, x.segment(n, n));
    t[4 * n] = x[2 * n];
    return t;
  };
  spec.rho_prime = [n](const Eigen::VectorXd& t) {
    Eigen::VectorXd r(2 * n + 1);
    r.head(2 * n) = t.head(2 * n);
    r[2 * n] = t[4 * n];
    return r;
  };
  spec.reduced_domain = [n](const Eigen::VectorXd& x) {
    return !x.segment(n, n).isZero(0.0) && x[2 * n] > 0.0;
  };

  const auto samples = optics_reduced_samples(s, 32, 31415927u);
  sys.hamiltonian_reduced = HamiltonianSystem{
      reduce_by_section(sys.hamiltonian_full.object, spec, samples, verification_config(cfg))};
  return sys;
}

LagrangianSystem particle_roundtrip_lagrangian(const ParticleModel& model,
                                               const SolverConfig& cfg) {
  const MinkowskiSpace s = model.space;
  const int n = s.dim();
  const double m = model.mass;
  const LagrangianSystem raw = inverse_legendre(particle_systems(model, cfg).hamiltonian_reduced);

  // Raw total coordinates: [q, qdot | q', p, lambda].
  SectionSpec spec;
  spec.reduced_fiber_dim = 0;
  spec.section = [s, n, m](const Eigen::VectorXd& x) {
    const Eigen::VectorXd v = x.tail(n);
    const double nv = std::sqrt(qf(s, v));
    Eigen::VectorXd t(4 * n + 1);
    t.head(2 * n) = x;
    t.segment(2 * n, n) = x.head(n);
    t.segment(3 * n, n) = (m / nv) * g_apply(s, v);
    t[4 * n] = nv;
    return t;
  };
  spec.rho_prime = [n](const Eigen::VectorXd& t) { return Eigen::VectorXd(t.head(2 * n)); };
  spec.reduced_domain = [s, n](const Eigen::VectorXd& x) { return qf(s, x.tail(n)) > 0.0; };

  std::mt19937_64 rng(4257321u);
  std::vector<Eigen::VectorXd> samples;
  for (int i = 0; i < 32; ++i) {
    Eigen::VectorXd b(2 * n);
    b.head(n) = random_point(n, rng);
    b.tail(n) = random_timelike_vector(s, rng);
    samples.push_back(b);
  }
  return LagrangianSystem{reduce_by_section(raw.object, spec, samples, verification_config(cfg))};
}

LagrangianSystem optics_roundtrip_lagrangian(const OpticsModel& model, const SolverConfig& cfg) {
  const MinkowskiSpace s = model.space;
  const int n = s.dim();
  const LagrangianSystem raw = inverse_legendre(optics_systems(model, cfg).hamiltonian_reduced);

  // Raw total coordinates: [q, qdot | q', p, mu]; reduce back to the mu fibre.
  SectionSpec spec;
  spec.reduced_fiber_dim = 1;
  spec.section = [s, n](const Eigen::VectorXd& x) {
    Eigen::VectorXd t(4 * n + 1);
    t.head(2 * n) = x.head(2 * n);
    t.segment(2 * n, n) = x.head(n);
    t.segment(3 * n, n) = g_apply(s, x.segment(n, n)) / x[2 * n];
    t[4 * n] = x[2 * n];
    return t;
  };
  spec.rho_prime = [n](const Eigen::VectorXd& t) {
    Eigen::VectorXd r(2 * n + 1);
    r.head(2 * n) = t.head(2 * n);
    r[2 * n] = t[4 * n];
    return r;
  };
  spec.reduced_domain = [n](const Eigen::VectorXd& x) {
    return !x.segment(n, n).isZero(0.0) && x[2 * n] > 0.0;
  };

  const auto samples = optics_reduced_samples(s, 32, 2718281u);
  return LagrangianSystem{reduce_by_section(raw.object, spec, samples, verification_config(cfg))};
}

bool particle_dynamics_membership(const ParticleModel& model, const TTStarQPoint& w, double tol) {
  const MinkowskiSpace& s = model.space;
  const double q2 = qf(s, w.qdot.coords);
  if (q2 <= 0.0) return false;
  if (w.pdot.coords.lpNorm<Eigen::Infinity>() > tol) return false;
  const Eigen::VectorXd p_ref = model.mass * g_apply(s, w.qdot.coords) / std::sqrt(q2);
  const double scale = std::max(1.0, p_ref.lpNorm<Eigen::Infinity>());
  return (w.p.coords - p_ref).lpNorm<Eigen::Infinity>() <= tol * scale;
}

bool optics_dynamics_membership(const OpticsModel& model, const TTStarQPoint& w, double tol) {
  const MinkowskiSpace& s = model.space;
  const Eigen::VectorXd& v = w.qdot.coords;
  if (v.isZero(0.0)) return false;
  const double scale = std::max(1.0, v.lpNorm<Eigen::Infinity>());
  if (std::abs(qf(s, v)) > tol * scale * scale) return false;
  if (w.pdot.coords.lpNorm<Eigen::Infinity>() > tol) return false;
  // p = g(qdot)/mu for some mu > 0.
  const Eigen::VectorXd gv = g_apply(s, v);
  const double pg = w.p.coords.dot(gv);
  const double gg = gv.dot(gv);
  if (pg <= 0.0) return false;
  const double inv_mu = pg / gg;  // least-squares ray coefficient
  const double pscale = std::max(1.0, w.p.coords.lpNorm<Eigen::Infinity>());
  return (w.p.coords - inv_mu * gv).lpNorm<Eigen::Infinity>() <= tol * pscale;
}

bool particle_graph_lambda2(const ParticleModel& model, const Eigen::VectorXd& p,
                            const Eigen::VectorXd& q, const Eigen::VectorXd& qdot, double tol) {
  (void)q;
  const MinkowskiSpace& s = model.space;
  const double q2 = qf(s, qdot);
  if (q2 <= 0.0) return false;
  const Eigen::VectorXd p_ref = model.mass * g_apply(s, qdot) / std::sqrt(q2);
  const double scale = std::max(1.0, p_ref.lpNorm<Eigen::Infinity>());
  return (p - p_ref).lpNorm<Eigen::Infinity>() <= tol * scale;
}

bool optics_graph_lambda1(const OpticsModel& model, const Eigen::VectorXd& p,
                          const Eigen::VectorXd& q, const Eigen::VectorXd& qdot, double mu,
                          double tol) {
  (void)q;
  const MinkowskiSpace& s = model.space;
  if (mu <= 0.0 || qdot.isZero(0.0)) return false;
  const double scale = std::max(1.0, qdot.lpNorm<Eigen::Infinity>());
  if (std::abs(qf(s, qdot)) > tol * scale * scale) return false;
  const Eigen::VectorXd gv = g_apply(s, qdot);
  const double pscale = std::max(1.0, gv.lpNorm<Eigen::Infinity>() / mu);
  return (p - gv / mu).lpNorm<Eigen::Infinity>() <= tol * pscale;
}

bool optics_graph_lambda2(const OpticsModel& model, const Eigen::VectorXd& p,
                          const Eigen::VectorXd& q, const Eigen::VectorXd& qdot, double tol) {
  (void)q;
  const MinkowskiSpace& s = model.space;
  if (qdot.isZero(0.0)) return false;
  const double scale = std::max(1.0, qdot.lpNorm<Eigen::Infinity>());
  if (std::abs(qf(s, qdot)) > tol * scale * scale) return false;
  const Eigen::VectorXd gv = g_apply(s, qdot);
  const double pg = p.dot(gv);
  if (pg <= 0.0) return false;
  const double c = pg / gv.dot(gv);
  const double pscale = std::max(1.0, p.lpNorm<Eigen::Infinity>());
  return (p - c * gv).lpNorm<Eigen::Infinity>() <= tol * pscale;
}

bool optics_graph_omega1(const OpticsModel& model, const Eigen::VectorXd& qdot,
                         const Eigen::VectorXd& q, const Eigen::VectorXd& p, double mu,
                         double tol) {
  (void)q;
  const MinkowskiSpace& s = model.space;
  if (mu <= 0.0 || p.isZero(0.0)) return false;
  const double pscale = std::max(1.0, p.lpNorm<Eigen::Infinity>());
  if (std::abs(co_qf(s, p)) > tol * pscale * pscale) return false;
  const Eigen::VectorXd v_ref = mu * g_inv(s, p);
  const double vscale = std::max(1.0, v_ref.lpNorm<Eigen::Infinity>());
  return (qdot - v_ref).lpNorm<Eigen::Infinity>() <= tol * vscale;
}

Eigen::VectorXd random_point(int dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  Eigen::VectorXd x(dim);
  for (int i = 0; i < dim; ++i) x[i] = u(rng);
  return x;
}

Eigen::VectorXd random_timelike_vector(const MinkowskiSpace& space, std::mt19937_64& rng) {
  const int n = space.dim();
  const Eigen::VectorXd& g = space.metric_diagonal();
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> margin(0.2, 1.2);
  Eigen::VectorXd v(n);
  for (int i = 1; i < n; ++i) v[i] = u(rng);
  double rest = 0.0;
  for (int i = 1; i < n; ++i) rest += std::abs(g[i]) * v[i] * v[i];
  v[0] = std::sqrt((rest + margin(rng)) / g[0]);
  if (u(rng) < 0.0) v[0] = -v[0];
  return v;
}

Eigen::VectorXd random_null_vector(const MinkowskiSpace& space, std::mt19937_64& rng) {
  const int n = space.dim();
  const Eigen::VectorXd& g = space.metric_diagonal();
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXd v(n);
  for (int i = 1; i < n; ++i) v[i] = u(rng);
  if (v.tail(n - 1).isZero(1e-3)) v[1] = 1.0;
  double rest = 0.0;
  for (int i = 1; i < n; ++i) rest += std::abs(g[i]) * v[i] * v[i];
  v[0] = std::sqrt(rest / g[0]);
  if (u(rng) < 0.0) v[0] = -v[0];
  return v;
}

Eigen::VectorXd random_timelike_covector(const MinkowskiSpace& space, std::mt19937_64& rng) {
  const int n = space.dim();
  const Eigen::VectorXd& g = space.metric_diagonal();
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> margin(0.2, 1.2);
  Eigen::VectorXd p(n);
  for (int i = 1; i < n; ++i) p[i] = u(rng);
  double rest = 0.0;
  for (int i = 1; i < n; ++i) rest += p[i] * p[i] / std::abs(g[i]);
  p[0] = std::sqrt(g[0] * (rest + margin(rng)));
  if (u(rng) < 0.0) p[0] = -p[0];
  return p;
}

TTStarQPoint random_particle_member(const ParticleModel& model, std::mt19937_64& rng) {
  const MinkowskiSpace& s = model.space;
  const int n = s.dim();
  const Eigen::VectorXd v = random_timelike_vector(s, rng);
  const Eigen::VectorXd p = model.mass * g_apply(s, v) / std::sqrt(qf(s, v));
  return TTStarQPoint{Point{random_point(n, rng)}, Covector{p}, Vector{v},
                      Covector{Eigen::VectorXd::Zero(n)}};
}

TTStarQPoint random_particle_nonmember(const ParticleModel& model, std::mt19937_64& rng) {
  const MinkowskiSpace& s = model.space;
  const int n = s.dim();
  TTStarQPoint w = random_particle_member(model, rng);
  std::uniform_int_distribution<int> mode(0, 2);
  std::uniform_int_distribution<int> idx(0, n - 1);
  std::uniform_real_distribution<double> bump(0.05, 0.5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  switch (mode(rng)) {
    case 0:
      w.pdot.coords[idx(rng)] += (u(rng) < 0.0 ? -1.0 : 1.0) * bump(rng);
      break;
    case 1:
      w.p.coords[idx(rng)] += (u(rng) < 0.0 ? -1.0 : 1.0) * bump(rng);
      break;
    default: {
      // Spacelike velocity.
      Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
      v[1] = 1.0 + bump(rng);
      v[0] = u(rng) * 0.5;
      w.qdot.coords = v;
      break;
    }
  }
  return w;
}

TTStarQPoint random_optics_member(const OpticsModel& model, std::mt19937_64& rng) {
  const MinkowskiSpace& s = model.space;
  const int n = s.dim();
  const Eigen::VectorXd v = random_null_vector(s, rng);
  std::uniform_real_distribution<double> mu(0.2, 3.0);
  const Eigen::VectorXd p = g_apply(s, v) / mu(rng);
  return TTStarQPoint{Point{random_point(n, rng)}, Covector{p}, Vector{v},
                      Covector{Eigen::VectorXd::Zero(n)}};
}

TTStarQPoint random_optics_nonmember(const OpticsModel& model, std::mt19937_64& rng) {
  const MinkowskiSpace& s = model.space;
  const int n = s.dim();
  TTStarQPoint w = random_optics_member(model, rng);
  std::uniform_int_distribution<int> mode(0, 2);
  std::uniform_int_distribution<int> idx(0, n - 1);
  std::uniform_real_distribution<double> bump(0.05, 0.5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  switch (mode(rng)) {
    case 0:
      w.pdot.coords[idx(rng)] += (u(rng) < 0.0 ? -1.0 : 1.0) * bump(rng);
      break;
    case 1:
      // Momentum on the opposite ray: mu would have to be negative.
      w.p.coords = -w.p.coords;
      break;
    default:
      // Timelike velocity (null condition broken), momentum kept consistent
      // with the old ray so only the cone test can reject it.
      w.qdot.coords = random_timelike_vector(s, rng);
      break;
  }
  return w;
}

std::vector<TTStarQPoint> particle_trajectory(const ParticleModel& model,
                                              const Eigen::VectorXd& q0,
                                              const Eigen::VectorXd& p0, int steps,
                                              double step_size) {
  const MinkowskiSpace& s = model.space;
  const int n = s.dim();
  if (q0.size() != n || p0.size() != n)
    throw std::invalid_argument("particle_trajectory: dimension mismatch");
  const double c = co_qf(s, p0);
  if (c <= 0.0 || std::abs(std::sqrt(c) - model.mass) > 1e-9)
    throw std::invalid_argument("particle_trajectory: initial momentum off the mass shell");
  const Eigen::VectorXd v = g_inv(s, p0) / model.mass;
  std::vector<TTStarQPoint> out;
  out.reserve(std::max(steps, 0));
  for (int i = 0; i < steps; ++i) {
    out.push_back(TTStarQPoint{Point{q0 + (i * step_size) * v}, Covector{p0}, Vector{v},
                               Covector{Eigen::VectorXd::Zero(n)}});
  }
  return out;
}

std::vector<TTStarQPoint> optics_trajectory(const OpticsModel& model, const Eigen::VectorXd& q0,
                                            const Eigen::VectorXd& p0, int steps,
                                            double step_size, double mu) {
  const MinkowskiSpace& s = model.space;
  const int n = s.dim();
  if (q0.size() != n || p0.size() != n)
    throw std::invalid_argument("optics_trajectory: dimension mismatch");
  if (mu <= 0.0) throw std::invalid_argument("optics_trajectory: mu must be positive");
  if (p0.isZero(0.0) || std::abs(co_qf(s, p0)) > 1e-9)
    throw std::invalid_argument("optics_trajectory: initial momentum not a nonzero null covector");
  const Eigen::VectorXd v = mu * g_inv(s, p0);
  std::vector<TTStarQPoint> out;
  out.reserve(std::max(steps, 0));
  for (int i = 0; i < steps; ++i) {
    out.push_back(TTStarQPoint{Point{q0 + (i * step_size) * v}, Covector{p0}, Vector{v},
                               Covector{Eigen::VectorXd::Zero(n)}});
  }
  return out;
}

}  // namespace genfam
