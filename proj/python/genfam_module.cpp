#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "genfam/verify.hpp"

namespace py = pybind11;
using namespace genfam;

namespace {

TTStarQPoint make_w(const Eigen::VectorXd& q, const Eigen::VectorXd& p, const Eigen::VectorXd& qdot,
                    const Eigen::VectorXd& pdot) {
  return TTStarQPoint{Point{q}, Covector{p}, Vector{qdot}, Covector{pdot}};
}

}  // namespace

PYBIND11_MODULE(_genfam, m) {
  m.doc() = "generating-family mechanics toolkit";

  py::class_<MinkowskiSpace>(m, "MinkowskiSpace")
      .def(py::init<int>(), py::arg("dim") = 4)
      .def("dim", &MinkowskiSpace::dim)
      .def("quadratic_form",
           [](const MinkowskiSpace& s, const Eigen::VectorXd& v) {
             return s.quadratic_form(Vector{v});
           })
      .def("co_quadratic_form",
           [](const MinkowskiSpace& s, const Eigen::VectorXd& p) {
             return s.co_quadratic_form(Covector{p});
           })
      .def("v_norm",
           [](const MinkowskiSpace& s, const Eigen::VectorXd& v) { return s.v_norm(Vector{v}); })
      .def("p_norm",
           [](const MinkowskiSpace& s, const Eigen::VectorXd& p) { return s.p_norm(Covector{p}); })
      .def("metric_apply",
           [](const MinkowskiSpace& s, const Eigen::VectorXd& v) {
             return s.metric_apply(Vector{v}).coords;
           })
      .def("metric_inverse_apply", [](const MinkowskiSpace& s, const Eigen::VectorXd& p) {
        return s.metric_inverse_apply(Covector{p}).coords;
      });

  m.def("pair",
        [](const Eigen::VectorXd& p, const Eigen::VectorXd& v) { return pair(p, v); });

  m.def("alpha_q", [](const Eigen::VectorXd& q, const Eigen::VectorXd& p,
                      const Eigen::VectorXd& qdot, const Eigen::VectorXd& pdot) {
    const TStarTQPoint s = alpha_Q(make_w(q, p, qdot, pdot));
    return py::make_tuple(s.q.coords, s.qdot.coords, s.a.coords, s.b.coords);
  });
  m.def("beta", [](const Eigen::VectorXd& q, const Eigen::VectorXd& p, const Eigen::VectorXd& qdot,
                   const Eigen::VectorXd& pdot) {
    const TStarTStarQPoint s = beta(make_w(q, p, qdot, pdot));
    return py::make_tuple(s.q.coords, s.p.coords, s.a.coords, s.b.coords);
  });
  m.def("kappa_q", [](const Eigen::VectorXd& q, const Eigen::VectorXd& v,
                      const Eigen::VectorXd& qdot, const Eigen::VectorXd& vdot) {
    const TTQPoint u = kappa_Q(TTQPoint{Point{q}, Vector{v}, Vector{qdot}, Vector{vdot}});
    return py::make_tuple(u.q.coords, u.v.coords, u.qdot.coords, u.vdot.coords);
  });
  m.def("hat_kappa", [](double k, const Eigen::VectorXd& q, const Eigen::VectorXd& p,
                        const Eigen::VectorXd& qdot, const Eigen::VectorXd& pdot) {
    const TTStarQPoint w = hat_kappa(k, make_w(q, p, qdot, pdot));
    return py::make_tuple(w.q.coords, w.p.coords, w.qdot.coords, w.pdot.coords);
  });

  m.def(
      "particle_membership",
      [](int dim, double mass, const Eigen::VectorXd& q, const Eigen::VectorXd& p,
         const Eigen::VectorXd& qdot, const Eigen::VectorXd& pdot, double tol) {
        return particle_dynamics_membership(ParticleModel{MinkowskiSpace(dim), mass},
                                            make_w(q, p, qdot, pdot), tol);
      },
      py::arg("dim"), py::arg("mass"), py::arg("q"), py::arg("p"), py::arg("qdot"),
      py::arg("pdot"), py::arg("tol") = 1e-8);
  m.def(
      "optics_membership",
      [](int dim, const Eigen::VectorXd& q, const Eigen::VectorXd& p, const Eigen::VectorXd& qdot,
         const Eigen::VectorXd& pdot, double tol) {
        return optics_dynamics_membership(OpticsModel{MinkowskiSpace(dim)},
                                          make_w(q, p, qdot, pdot), tol);
      },
      py::arg("dim"), py::arg("q"), py::arg("p"), py::arg("qdot"), py::arg("pdot"),
      py::arg("tol") = 1e-8);

  m.def(
      "particle_lagrangian",
      [](int dim, double mass, const Eigen::VectorXd& q, const Eigen::VectorXd& qdot) {
        const auto sys = particle_systems(ParticleModel{MinkowskiSpace(dim), mass});
        Eigen::VectorXd x(2 * dim);
        x << q, qdot;
        return sys.lagrangian.lagrangian(x);
      },
      py::arg("dim"), py::arg("mass"), py::arg("q"), py::arg("qdot"));
  m.def(
      "particle_hamiltonian",
      [](int dim, double mass, const Eigen::VectorXd& q, const Eigen::VectorXd& p, double lam) {
        const auto sys = particle_systems(ParticleModel{MinkowskiSpace(dim), mass});
        Eigen::VectorXd x(2 * dim + 1);
        x << q, p, lam;
        return sys.hamiltonian_reduced.hamiltonian(x);
      },
      py::arg("dim"), py::arg("mass"), py::arg("q"), py::arg("p"), py::arg("lam"));
  m.def(
      "optics_hamiltonian",
      [](int dim, const Eigen::VectorXd& q, const Eigen::VectorXd& p, double mu) {
        const auto sys = optics_systems(OpticsModel{MinkowskiSpace(dim)});
        Eigen::VectorXd x(2 * dim + 1);
        x << q, p, mu;
        return sys.hamiltonian_reduced.hamiltonian(x);
      },
      py::arg("dim"), py::arg("q"), py::arg("p"), py::arg("mu"));

  m.def(
      "particle_trajectory",
      [](int dim, double mass, const Eigen::VectorXd& q0, const Eigen::VectorXd& p0, int steps,
         double step_size) {
        const auto traj =
            particle_trajectory(ParticleModel{MinkowskiSpace(dim), mass}, q0, p0, steps, step_size);
        py::list out;
        for (const auto& w : traj)
          out.append(py::make_tuple(w.q.coords, w.p.coords, w.qdot.coords, w.pdot.coords));
        return out;
      },
      py::arg("dim"), py::arg("mass"), py::arg("q0"), py::arg("p0"), py::arg("steps"),
      py::arg("step_size"));
  m.def(
      "optics_trajectory",
      [](int dim, const Eigen::VectorXd& q0, const Eigen::VectorXd& p0, int steps,
         double step_size, double mu) {
        const auto traj = optics_trajectory(OpticsModel{MinkowskiSpace(dim)}, q0, p0, steps,
                                            step_size, mu);
        py::list out;
        for (const auto& w : traj)
          out.append(py::make_tuple(w.q.coords, w.p.coords, w.qdot.coords, w.pdot.coords));
        return out;
      },
      py::arg("dim"), py::arg("q0"), py::arg("p0"), py::arg("steps"), py::arg("step_size"),
      py::arg("mu") = 1.0);

  m.def(
      "run_verify",
      [](const std::string& suite, int dim, double mass, double tol, std::uint64_t seed) {
        RunConfig cfg;
        cfg.suite = suite;
        cfg.dim = dim;
        cfg.mass = mass;
        cfg.tol = tol;
        cfg.seed = seed;
        const VerificationReport rep = run_verify(cfg);
        py::list checks;
        for (const auto& c : rep.checks) {
          py::dict d;
          d["id"] = c.id;
          d["anchor"] = c.anchor;
          d["samples"] = c.samples;
          d["max_residual"] = c.max_residual;
          d["tolerance"] = c.tolerance;
          d["pass"] = c.pass;
          checks.append(d);
        }
        py::dict out;
        out["checks"] = checks;
        out["passed"] = rep.passed();
        out["failed"] = rep.failed();
        return out;
      },
      py::arg("suite") = "all", py::arg("dim") = 4, py::arg("mass") = 1.0, py::arg("tol") = 0.0,
      py::arg("seed") = 12345);

  m.def("report_json", [](const std::string& suite, int dim, double mass, double tol,
                          std::uint64_t seed) {
    RunConfig cfg;
    cfg.suite = suite;
    cfg.dim = dim;
    cfg.mass = mass;
    cfg.tol = tol;
    cfg.seed = seed;
    return report_to_json(run_verify(cfg));
  });
}
