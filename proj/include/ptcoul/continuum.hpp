// Copyright 2026 The ptcoul Authors
// SPDX-License-Identifier: Apache-2.0

// Exact solutions of the continuum PT-symmetric Coulomb equation
//   -psi'' + L(L+1)/x^2 psi + iZ/x psi = -k^2 psi
// (units 2m = hbar = 1) evaluated along the U-shaped complex contour that
// passes below the origin.

#pragma once

#include <utility>
#include <vector>

#include "ptcoul/types.hpp"

namespace ptcoul {

inline constexpr double kKummerMaxArgument = 30.0;

/// Confluent hypergeometric 1F1(alpha; beta; x) by its Taylor series.
/// Throws DomainError when beta is a non-positive integer or
/// |x| > kKummerMaxArgument, ConvergenceError after 10^4 terms.
Complex kummer_1f1(Complex alpha, Complex beta, Complex argument);

class ContinuumSpec {
 public:
  /// Requires L > -1/2 and k > 0. Integer 2L is accepted here; only the
  /// second solution needs 2L outside the integers.
  ContinuumSpec(double angular, double charge, double wave_number, Complex c1 = Complex(1.0, 0.0),
                Complex c2 = Complex(0.0, 0.0));

  double angular() const { return angular_; }
  double charge() const { return charge_; }
  double wave_number() const { return wave_number_; }
  double energy() const { return -wave_number_ * wave_number_; }
  Complex c1() const { return c1_; }
  Complex c2() const { return c2_; }
  /// True when Psi_2 exists, i.e. 2L is not an integer.
  bool has_second_solution() const;

 private:
  double angular_;
  double charge_;
  double wave_number_;
  Complex c1_;
  Complex c2_;
};

/// (Psi_1(x), Psi_2(x)). Psi_2 is NaN when 2L is an integer.
std::pair<Complex, Complex> psi_solutions(const ContinuumSpec& spec, Complex x);

/// C1 Psi_1 + C2 Psi_2, skipping a term whose coefficient is zero.
Complex psi_general(const ContinuumSpec& spec, Complex x);

enum class ContourBranch { kLeft, kArc, kRight };

/// One branch formula evaluated at s regardless of its nominal range.
Complex contour_branch_point(ContourBranch branch, double epsilon, double s);
ContourBranch contour_branch(double epsilon, double s);

/// x(s): the left line -i(s + pi eps/2) - eps, the lower half circle
/// eps exp(i(s/eps + 3 pi/2)), the right line i(s - pi eps/2) + eps.
Complex contour_point(double epsilon, double s);

/// dx/ds and d^2x/ds^2 on the branch containing s.
std::pair<Complex, Complex> contour_derivatives(double epsilon, double s);

struct ContourSample {
  double s;
  Complex x;
};

struct ContourSpec {
  double epsilon = 1.0;
  std::vector<ContourSample> samples;

  double spacing() const { return samples.size() < 2 ? 0.0 : samples[1].s - samples[0].s; }
};

/// Uniform samples s_i on [s_min, s_max].
ContourSpec make_contour(double epsilon, double s_min, double s_max, int n_samples);

/// Every other sample of `c` (spacing doubled).
ContourSpec coarsen(const ContourSpec& c);

struct ResidualReport {
  /// max over interior samples of the ODE residual / max |Psi|.
  double residual = 0.0;
  /// Same quantity at doubled spacing (halving test).
  double coarse_residual = 0.0;
  int points_checked = 0;
};

/// Finite-difference ODE residual of C1 Psi_1 + C2 Psi_2 along the contour.
/// Only samples whose three-point stencil stays on one smooth branch are
/// used. Throws DomainError when the residual is large and still shrinking
/// under refinement (spacing too coarse to resolve the solution).
ResidualReport ode_residual_on_contour(const ContinuumSpec& spec, const ContourSpec& contour);

}  // namespace ptcoul
