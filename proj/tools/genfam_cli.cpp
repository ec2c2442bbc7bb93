#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "genfam/verify.hpp"

namespace {

int write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open output file: " << path << "\n";
    return 2;
  }
  f << text;
  return 0;
}

Eigen::VectorXd parse_vec(const std::vector<double>& v) {
  Eigen::VectorXd x(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) x[i] = v[i];
  return x;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"genfam: verification suites, dynamics samples and trajectories"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  genfam::RunConfig cfg;
  app.add_option("--suite", cfg.suite,
                 "all | bundles | families | legendre | homogeneity | particle | optics");
  app.add_option("--dim", cfg.dim, "space-time dimension")->check(CLI::PositiveNumber);
  app.add_option("--mass", cfg.mass, "particle mass")->check(CLI::PositiveNumber);
  app.add_option("--samples", cfg.samples, "sample count for the sample subcommand")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--tol", cfg.tol, "override every check tolerance (0 = per-check defaults)");
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--out", cfg.out, "output path (default stdout)");
  app.add_option("--format", cfg.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "run a verification suite (default)");

  std::string model = "particle";
  auto* sample = app.add_subcommand("sample", "emit dynamics-set samples with residuals");
  sample->add_option("--model", model, "particle | optics");

  auto* traj = app.add_subcommand("trajectory", "emit a CSV trajectory");
  std::vector<double> q0v, p0v;
  int steps = 100;
  double step_size = 0.05;
  traj->add_option("--model", model, "particle | optics");
  traj->add_option("--q0", q0v, "initial position coordinates")->expected(1, -1);
  traj->add_option("--p0", p0v, "initial momentum coordinates")->expected(1, -1);
  traj->add_option("--steps", steps, "step count")->check(CLI::PositiveNumber);
  traj->add_option("--step-size", step_size, "parameter increment")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (sample->parsed()) {
      return write_out(cfg.out, genfam::run_sample(cfg, model, cfg.samples));
    }
    if (traj->parsed()) {
      if (static_cast<int>(q0v.size()) != cfg.dim || static_cast<int>(p0v.size()) != cfg.dim) {
        std::cerr << "trajectory: --q0 and --p0 must each have --dim coordinates\n";
        return 2;
      }
      return write_out(cfg.out,
                       genfam::run_trajectory(cfg, model, parse_vec(q0v), parse_vec(p0v), steps,
                                              step_size));
    }
    (void)verify;
    const genfam::VerificationReport rep = genfam::run_verify(cfg);
    const std::string text =
        cfg.format == "csv" ? genfam::report_to_csv(rep) : genfam::report_to_json(rep);
    const int werr = write_out(cfg.out, text);
    if (werr != 0) return werr;
    return rep.all_passed() ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
