// Copyright 2026 The ptcoul Authors
// SPDX-License-Identifier: Apache-2.0

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ptcoul/cli.hpp"
#include "ptcoul/continuum.hpp"
#include "ptcoul/eigensolve.hpp"
#include "ptcoul/lattice.hpp"
#include "ptcoul/metrics.hpp"
#include "ptcoul/spectra.hpp"

namespace ptcoul::cli {

namespace {

Check within(std::string name, double measured, double expected, double tolerance) {
  return {std::move(name), std::abs(measured - expected) <= tolerance, measured, expected,
          tolerance};
}

Check at_most(std::string name, double error, double tolerance) {
  return {std::move(name), error <= tolerance, error, 0.0, tolerance};
}

CMatrix coulomb(int n, double a, double z = -1.0) {
  return build_coulomb_hamiltonian(n, a, z).matrix;
}

double coefficient_error(const CVector& p, const std::vector<double>& printed) {
  double worst = 0.0;
  for (std::size_t i = 0; i < printed.size(); ++i) {
    worst = std::max(worst, std::abs(p(static_cast<Eigen::Index>(i)) - printed[i]));
  }
  return worst;
}

std::vector<double> printed_quartic(double a) {
  const double a2 = a * a;
  return {1.0, -8.0, 21.0 + 10.0 / 9.0 * a2, -40.0 / 9.0 * a2 - 20.0,
          5.0 + a2 * a2 / 9.0 + 5.0 * a2};
}

std::vector<double> printed_sextic(double a) {
  const double a2 = a * a;
  const double a4 = a2 * a2;
  return {1.0,
          -12.0,
          55.0 + 259.0 / 225.0 * a2,
          -120.0 - 2072.0 / 225.0 * a2,
          126.0 + 5894.0 / 225.0 * a2 + 7.0 / 45.0 * a4,
          -56.0 - 280.0 / 9.0 * a2 - 28.0 / 45.0 * a4,
          7.0 + 14.0 * a2 + 7.0 / 9.0 * a4 + a4 * a2 / 225.0};
}

// Smallest distance between two unordered 4-element lists, by enumeration.
double closed_form_error(double a) {
  const auto cf = closed_form_spectrum_n4(a);
  const CVector ev = eigenvalues(coulomb(4, a)).eigenvalues;
  std::array<int, 4> perm{0, 1, 2, 3};
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (int j = 0; j < 4; ++j) worst = std::max(worst, std::abs(ev(j) - cf[perm[j]]));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Check> paper_n4() {
  std::vector<Check> out;
  for (const double a : {0.0, 1.0 / 3.0, 0.5, 1.0}) {
    out.push_back(at_most(
        "quartic coefficients a=" + format_number(a),
        coefficient_error(characteristic_polynomial(coulomb(4, a)), printed_quartic(a)), 1e-12));
  }
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) worst = std::max(worst, closed_form_error(2.0 * (i + 0.5) / 50));
  out.push_back(at_most("closed-form spectrum on [0,2]", worst, 1e-9));
  out.push_back(
      within("critical coupling N=4", critical_coupling(4, -1.0, 1e-8), reality_bound_n4(), 1e-7));
  return out;
}

std::vector<Check> paper_n6() {
  std::vector<Check> out;
  for (const double a : {0.0, 1.0 / 3.0, 0.5}) {
    out.push_back(at_most(
        "sextic coefficients a=" + format_number(a),
        coefficient_error(characteristic_polynomial(coulomb(6, a)), printed_sextic(a)), 1e-11));
  }
  out.push_back(within("critical coupling N=6", critical_coupling(6, -1.0, 1e-6), 0.589586, 1e-4));
  const auto eps = exceptional_points(6, -1.0, 3.0, 1e-6);
  out.push_back(within("first exceptional point N=6", eps.empty() ? 0.0 : eps.front().coupling,
                       0.589586, 1e-4));
  return out;
}

std::vector<Check> metrics_n2() {
  std::vector<Check> out;
  double eig_err = 0.0;
  double residual = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double k = 0.5 + 0.1 * i;
    const double m = -1.0 + 0.1 * i;
    const double a = -0.95 + 0.1 * i;
    const auto theta = n2_metric(k, m, a);
    const Eigen::SelfAdjointEigenSolver<CMatrix> solver(theta.matrix(), Eigen::EigenvaluesOnly);
    const auto closed = n2_metric_eigenvalues(k, m, a);
    eig_err = std::max({eig_err, std::abs(solver.eigenvalues()(0) - closed[0]),
                        std::abs(solver.eigenvalues()(1) - closed[1])});
    residual = std::max(residual, dieudonne_residual(coulomb(2, a), theta));
  }
  out.push_back(at_most("metric eigenvalues k -/+ sqrt(k^2 m^2 + k^2 a^2)", eig_err, 1e-12));
  out.push_back(at_most("two-parameter metric solves H^dagger Theta = Theta H", residual, 1e-14));
  out.push_back(within("Hermitian solution dimension N=2",
                       dieudonne_solution_dimension(coulomb(2, 0.5)), 2.0, 0.0));
  double involution = 0.0;
  double cpt_residual = 0.0;
  for (const double a : {0.0, 0.3, 0.6, 0.9}) {
    const auto c = cpt_charge_n2(a);
    involution = std::max(
        involution, (c.charge * c.charge - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff());
    cpt_residual = std::max(cpt_residual, dieudonne_residual(coulomb(2, a), c.metric()));
  }
  out.push_back(at_most("charge squares to identity", involution, 1e-14));
  out.push_back(at_most("CP metric solves the Dieudonne equation", cpt_residual, 1e-14));
  double reobtained = 0.0;
  for (const double a : {0.3, 0.6, 0.9}) {
    reobtained =
        std::max(reobtained, (CMatrix(n2_observable(2.0, 0.0, 0.0, -a, a).matrix) - coulomb(2, a))
                                 .cwiseAbs()
                                 .maxCoeff());
  }
  out.push_back(at_most("observable (D=2, g=-a) reproduces H", reobtained, 0.0));
  return out;
}

std::vector<Check> metrics_n4() {
  std::vector<Check> out;
  double eig_err = 0.0;
  double residual = 0.0;
  for (const double a : {0.2, 0.4}) {
    for (const double z : {-1.0, -0.8}) {
      const auto theta = n4_metric_ansatz(1.0, 0.0, 1.0, 0.0, a, z);
      const Eigen::SelfAdjointEigenSolver<CMatrix> solver(theta.matrix(), Eigen::EigenvaluesOnly);
      const auto closed = n4_unit_metric_eigenvalues(a, z);
      for (int j = 0; j < 4; ++j) {
        eig_err = std::max(eig_err, std::abs(solver.eigenvalues()(j) - closed[j]));
      }
      residual = std::max(residual, dieudonne_residual(coulomb(4, a, z), theta));
    }
  }
  out.push_back(at_most("ansatz eigenvalues match closed form", eig_err, 1e-10));
  out.push_back(at_most("ansatz solves the Dieudonne equation", residual, 1e-12));
  const auto biorthogonal =
      metric_from_biorthogonal(eigensystem(coulomb(4, 0.5)), KappaWeights::ones(4));
  out.push_back(at_most("biorthogonal metric N=4 residual",
                        dieudonne_residual(coulomb(4, 0.5), biorthogonal), 1e-10));
  const auto pos = is_positive(biorthogonal);
  out.push_back({"biorthogonal metric N=4 positive", pos.positive, pos.min_eigenvalue, 0.0, 0.0});
  return out;
}

std::vector<Check> continuum() {
  std::vector<Check> out;
  const ContinuumSpec free(0.0, 0.0, 1.0);
  double sinh_err = 0.0;
  for (const Complex x : {Complex(0.5, 0.0), Complex(1.0, -2.0), Complex(-1.0, -0.7)}) {
    const Complex expected = std::sinh(x);
    sinh_err =
        std::max(sinh_err, std::abs(psi_solutions(free, x).first - expected) / std::abs(expected));
  }
  out.push_back(at_most("Psi_1 equals sinh(kx)/k at Z=0 L=0", sinh_err, 1e-12));
  const ContinuumSpec generic(0.25, 1.0, 0.5, 1.0, 0.0);
  const auto r = ode_residual_on_contour(generic, make_contour(1.0, -6.0, 6.0, 1201));
  out.push_back(
      within("residual ratio under mesh halving", r.coarse_residual / r.residual, 4.0, 0.4));
  double joint = 0.0;
  for (const double eps : {0.1, 1.0, 10.0}) {
    const double s = 0.5 * std::numbers::pi * eps;
    joint = std::max({joint,
                      std::abs(contour_branch_point(ContourBranch::kLeft, eps, -s) -
                               contour_branch_point(ContourBranch::kArc, eps, -s)),
                      std::abs(contour_branch_point(ContourBranch::kArc, eps, s) -
                               contour_branch_point(ContourBranch::kRight, eps, s))});
  }
  out.push_back(at_most("contour branch joints continuous", joint, 1e-12));
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"paper-n4",   "paper-n6",  "metrics-n2",
                                              "metrics-n4", "continuum", "all"};
  return names;
}

std::vector<Check> verify_suite(const std::string& suite) {
  if (suite == "paper-n4") return paper_n4();
  if (suite == "paper-n6") return paper_n6();
  if (suite == "metrics-n2") return metrics_n2();
  if (suite == "metrics-n4") return metrics_n4();
  if (suite == "continuum") return continuum();
  if (suite == "all") {
    std::vector<Check> out;
    for (const auto& name : suite_names()) {
      if (name == "all") continue;
      auto part = verify_suite(name);
      for (auto& c : part) c.name = name + ": " + c.name;
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace ptcoul::cli
