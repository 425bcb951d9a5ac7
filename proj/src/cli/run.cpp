// Copyright 2026 The ptcoul Authors
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ptcoul/cli.hpp"
#include "ptcoul/continuum.hpp"
#include "ptcoul/eigensolve.hpp"
#include "ptcoul/lattice.hpp"
#include "ptcoul/metrics.hpp"
#include "ptcoul/spectra.hpp"

namespace ptcoul::cli {

namespace {

struct Options {
  int n = 4;
  double a = 0.0;
  double z = -1.0;
  double a_min = 0.0;
  double a_max = 1.0;
  int steps = 101;
  int samples = 1201;
  double tol = 0.0;
  double epsilon = 1.0;
  double angular = 0.25;
  double charge = 1.0;
  double wave_number = 0.5;
  double c1 = 1.0;
  double c2 = 0.0;
  double s_max = 6.0;
  std::vector<double> kappa;
  double d_diag = 2.0;
  double b_im = 0.0;
  double c_im = 0.0;
  double g_im = 0.0;
  double m_shape = 0.0;
  std::string suite = "all";
  std::string out;
  std::string format = "csv";
};

void add_matrix(Table& t, const CMatrix& m) {
  t.columns = {"row", "col", "re", "im"};
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      t.rows.push_back({static_cast<long long>(r + 1), static_cast<long long>(c + 1),
                        m(r, c).real(), m(r, c).imag()});
    }
  }
}

Report hamiltonian(const Options& o) {
  Report r{"hamiltonian", {{"n", o.n}, {"a", o.a}, {"z", o.z}}, {}, {}};
  add_matrix(r.results, build_coulomb_hamiltonian(o.n, o.a, o.z).matrix);
  return r;
}

Report spectrum(const Options& o) {
  const double tol = o.tol > 0.0 ? o.tol : kDefaultRealityTolerance;
  Report r{"spectrum", {{"n", o.n}, {"a", o.a}, {"z", o.z}, {"tol", tol}}, {}, {}};
  const Spectrum s = eigenvalues(build_coulomb_hamiltonian(o.n, o.a, o.z).matrix, tol);
  r.results.columns = {"index", "re", "im", "real"};
  for (Eigen::Index j = 0; j < s.size(); ++j) {
    r.results.rows.push_back({static_cast<long long>(j + 1), s.eigenvalues(j).real(),
                              s.eigenvalues(j).imag(),
                              static_cast<bool>(s.real_flags[static_cast<std::size_t>(j)])});
  }
  return r;
}

Report sweep_command(const Options& o) {
  Report r{"sweep",
           {{"n", o.n}, {"z", o.z}, {"a_min", o.a_min}, {"a_max", o.a_max}, {"steps", o.steps}},
           {},
           {}};
  const SweepTable table = sweep(o.n, o.z, o.a_min, o.a_max, o.steps);
  r.results.columns = {"a"};
  for (int j = 1; j <= o.n; ++j) {
    r.results.columns.push_back("eps" + std::to_string(j) + "_re");
    r.results.columns.push_back("eps" + std::to_string(j) + "_im");
  }
  r.results.columns.push_back("n_real");
  for (const auto& row : table.rows) {
    std::vector<Cell> cells{row.coupling};
    for (Eigen::Index j = 0; j < row.eigenvalues.size(); ++j) {
      cells.emplace_back(row.eigenvalues(j).real());
      cells.emplace_back(row.eigenvalues(j).imag());
    }
    cells.emplace_back(static_cast<long long>(row.n_real));
    r.results.rows.push_back(std::move(cells));
  }
  double worst = 0.0;
  for (const auto& row : table.rows)
    worst = std::max(worst, updown_symmetry_defect(row.eigenvalues));
  r.checks.push_back({"up-down symmetry eps -> 4 - conj(eps)", worst <= 1e-9, worst, 0.0, 1e-9});
  return r;
}

Report critical(const Options& o) {
  const double tol = o.tol > 0.0 ? o.tol : 1e-8;
  Report r{"critical", {{"n", o.n}, {"z", o.z}, {"tol", tol}}, {}, {}};
  r.results.columns = {"alpha", "tol"};
  r.results.rows.push_back({critical_coupling(o.n, o.z, tol), tol});
  return r;
}

Report exceptional(const Options& o) {
  const double tol = o.tol > 0.0 ? o.tol : 1e-6;
  Report r{"eps", {{"n", o.n}, {"z", o.z}, {"a_max", o.a_max}, {"tol", tol}}, {}, {}};
  r.results.columns = {"a", "n_real_below", "n_real_above"};
  for (const auto& ep : exceptional_points(o.n, o.z, o.a_max, tol)) {
    r.results.rows.push_back({ep.coupling, static_cast<long long>(ep.n_real_below),
                              static_cast<long long>(ep.n_real_above)});
  }
  return r;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_number(v[i]);
  return s;
}

Report metric(const Options& o) {
  const CMatrix h = build_coulomb_hamiltonian(o.n, o.a, o.z).matrix;
  const KappaWeights weights = o.kappa.empty() ? KappaWeights::ones(o.n) : KappaWeights(o.kappa);
  Report r{
      "metric", {{"n", o.n}, {"a", o.a}, {"z", o.z}, {"kappa", join(weights.values())}}, {}, {}};
  const auto theta = metric_from_biorthogonal(eigensystem(h), weights);
  add_matrix(r.results, theta.matrix());
  const double herm = hermiticity_error(theta.matrix());
  const double residual = dieudonne_residual(h, theta);
  const auto pos = is_positive(theta);
  r.checks.push_back(
      {"hermiticity", herm <= kHermiticityTolerance, herm, 0.0, kHermiticityTolerance});
  r.checks.push_back({"dieudonne residual", residual <= 1e-10, residual, 0.0, 1e-10});
  r.checks.push_back({"smallest eigenvalue > 0", pos.positive, pos.min_eigenvalue, 0.0, 0.0});
  return r;
}

Report observable(const Options& o) {
  Report r{
      "observable",
      {{"a", o.a}, {"D", o.d_diag}, {"b", o.b_im}, {"c", o.c_im}, {"g", o.g_im}, {"m", o.m_shape}},
      {},
      {}};
  const auto obs = n2_observable(o.d_diag, o.b_im, o.c_im, o.g_im, o.a, o.m_shape);
  add_matrix(r.results, CMatrix(obs.matrix));
  const double residual = dieudonne_residual(CMatrix(obs.matrix), n2_metric(1.0, o.m_shape, o.a));
  r.checks.push_back(
      {"dieudonne residual against n2 metric", residual <= 1e-12, residual, 0.0, 1e-12});
  return r;
}

Report continuum_check(const Options& o) {
  Report r{"continuum-check",
           {{"L", o.angular},
            {"Z", o.charge},
            {"k", o.wave_number},
            {"c1", o.c1},
            {"c2", o.c2},
            {"epsilon", o.epsilon},
            {"s_max", o.s_max},
            {"steps", o.samples}},
           {},
           {}};
  const ContinuumSpec spec(o.angular, o.charge, o.wave_number, o.c1, o.c2);
  const auto contour = make_contour(o.epsilon, -o.s_max, o.s_max, o.samples);
  const auto report = ode_residual_on_contour(spec, contour);
  const double ratio = report.residual > 0.0 ? report.coarse_residual / report.residual : 0.0;
  r.results.columns = {"spacing", "residual", "coarse_residual", "ratio", "points"};
  r.results.rows.push_back({contour.spacing(), report.residual, report.coarse_residual, ratio,
                            static_cast<long long>(report.points_checked)});
  if (report.residual > 0.0) {
    r.checks.push_back({"second-order convergence", std::abs(ratio - 4.0) <= 0.4, ratio, 4.0, 0.4});
  }
  return r;
}

Report verify(const Options& o) {
  return {"verify", {{"suite", o.suite}}, {}, verify_suite(o.suite)};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Spectra, exceptional points and metrics of PT-symmetric Coulomb chains", "ptcoul"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", o.out, "Write output to this file instead of stdout");
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  auto* ham = app.add_subcommand("hamiltonian", "Matrix entries of H(N)(a, z)");
  auto* spec = app.add_subcommand("spectrum", "Eigenvalues with reality flags");
  auto* swp = app.add_subcommand("sweep", "Continuity-ordered eigenvalue loci over a");
  auto* crit = app.add_subcommand("critical", "Edge of the reality domain by bisection");
  auto* eps = app.add_subcommand("eps", "Couplings where the number of real eigenvalues changes");
  auto* met = app.add_subcommand("metric", "Biorthogonal metric with Dieudonne checks");
  auto* obs = app.add_subcommand("observable", "Admissible N = 2 observable");
  auto* cont = app.add_subcommand("continuum-check", "ODE residual of the continuum solutions");
  auto* ver = app.add_subcommand("verify", "Run a verification suite");

  for (auto* sub : {ham, spec, swp, crit, eps, met}) {
    sub->add_option("--n", o.n, "Number of lattice points (even)")->required();
    sub->add_option("--z", o.z, "Coulomb exponent")->capture_default_str();
  }
  for (auto* sub : {ham, spec, met, obs}) {
    sub->add_option("--a", o.a, "Coupling")->required();
  }
  for (auto* sub : {spec, crit, eps}) sub->add_option("--tol", o.tol, "Tolerance");
  swp->add_option("--a-min", o.a_min, "Smallest coupling")->capture_default_str();
  swp->add_option("--a-max", o.a_max, "Largest coupling")->required();
  eps->add_option("--a-max", o.a_max, "Largest coupling")->required();
  swp->add_option("--steps", o.steps, "Number of couplings")->capture_default_str();
  cont->add_option("--steps", o.samples, "Number of contour samples")->capture_default_str();
  met->add_option("--kappa", o.kappa, "Positive weights, one per eigenpair")->delimiter(',');
  obs->add_option("--D", o.d_diag, "Real diagonal D")->capture_default_str();
  obs->add_option("--b", o.b_im, "Imaginary part b")->capture_default_str();
  obs->add_option("--c", o.c_im, "Imaginary part c")->capture_default_str();
  obs->add_option("--g", o.g_im, "Imaginary part g")->capture_default_str();
  obs->add_option("--m", o.m_shape, "Shape m of the companion metric")->capture_default_str();
  cont->add_option("--L", o.angular, "Angular momentum")->capture_default_str();
  cont->add_option("--Z", o.charge, "Coulomb charge")->capture_default_str();
  cont->add_option("--k", o.wave_number, "Wave number, E = -k^2")->capture_default_str();
  cont->add_option("--c1", o.c1, "Coefficient of Psi_1")->capture_default_str();
  cont->add_option("--c2", o.c2, "Coefficient of Psi_2")->capture_default_str();
  cont->add_option("--epsilon", o.epsilon, "Contour radius")->capture_default_str();
  cont->add_option("--s-max", o.s_max, "Contour parameter range [-s, s]")->capture_default_str();
  ver->add_option("suite", o.suite, "Suite name")
      ->check(CLI::IsMember(suite_names()))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  Report report;
  try {
    if (ham->parsed()) report = hamiltonian(o);
    if (spec->parsed()) report = spectrum(o);
    if (swp->parsed()) report = sweep_command(o);
    if (crit->parsed()) report = critical(o);
    if (eps->parsed()) report = exceptional(o);
    if (met->parsed()) report = metric(o);
    if (obs->parsed()) report = observable(o);
    if (cont->parsed()) report = continuum_check(o);
    if (ver->parsed()) report = verify(o);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  std::ostringstream text;
  if (o.format == "json") {
    write_json(report, text);
  } else {
    write_csv(report, text);
  }
  if (o.out.empty()) {
    out << text.str();
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file || !(file << text.str())) {
      err << "error: cannot write " << o.out << '\n';
      return 1;
    }
  }

  bool ok = true;
  for (const auto& c : report.checks) {
    if (!c.passed) {
      ok = false;
      err << "check failed: " << c.name << " (measured " << format_number(c.measured)
          << ", expected " << format_number(c.expected) << ", tolerance "
          << format_number(c.tolerance) << ")\n";
    }
  }
  return ok ? 0 : 1;
}

}  // namespace ptcoul::cli
