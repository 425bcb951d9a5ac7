// Copyright 2026 The ptcoul Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <vector>

#include "ptcoul/eigensolve.hpp"
#include "ptcoul/lattice.hpp"

namespace ptcoul {

/// Closed-form N = 4 Coulomb spectrum
/// eps = 2 +/- (1/6) sqrt(54 - 20 a^2 +/- 2 sqrt(405 - 720 a^2 + 64 a^4)),
/// principal branches, sorted by (Re, Im).
std::array<Complex, 4> closed_form_spectrum_n4(double coupling);

/// Exact N = 4 reality bound (3/4) sqrt(10 - 4 sqrt 5).
double reality_bound_n4();

struct RealityReport {
  double coupling = 0.0;
  int n_real = 0;
  int size = 0;
  bool fully_real = false;
  bool fully_complex = false;
};

RealityReport reality_report(const LatticeHamiltonian& h,
                             double tolerance = kDefaultRealityTolerance);

/// Largest a such that H^(N)(a', z) has a fully real spectrum for all
/// 0 <= a' <= a, located by bisection to width <= tolerance. Returns the
/// lower (real-side) edge of the final bracket.
double critical_coupling(int n_points, double exponent, double tolerance,
                         double reality_tolerance = kDefaultRealityTolerance);

/// A coupling where the number of real eigenvalues changes.
struct ExceptionalPoint {
  double coupling = 0.0;
  int n_real_below = 0;
  int n_real_above = 0;
};

/// Every change of n_real on [0, a_max], in increasing order. Each point is
/// refined by bisection to width <= tolerance; coincident mergers (the
/// mirrored pairs of the up-down symmetry) show up as one point with a drop
/// of 4.
std::vector<ExceptionalPoint> exceptional_points(
    int n_points, double exponent, double a_max, double tolerance,
    double reality_tolerance = kDefaultRealityTolerance, int scan_samples = 512);

struct SweepRow {
  double coupling = 0.0;
  /// Continuity ordered: column j follows the same locus from row to row.
  CVector eigenvalues;
  int n_real = 0;
  /// Nearest-neighbour tracking is unreliable here (an EP was crossed or
  /// two eigenvalues are closer than the step displacement).
  bool ambiguous_ordering = false;
};

struct SweepTable {
  int n_points = 0;
  double exponent = -1.0;
  std::vector<SweepRow> rows;
};

SweepTable sweep(int n_points, double exponent, double a_min, double a_max, int steps,
                 double reality_tolerance = kDefaultRealityTolerance);

/// Greedy global nearest-neighbour matching of `next` onto `previous`:
/// returns next reordered so that entry j continues entry j of previous.
CVector match_continuation(const CVector& previous, const CVector& next);

/// Largest distance between the multiset {eps} and its image {4 - conj(eps)}
/// under optimal greedy pairing. Zero for any H^(N)(a, z) in exact arithmetic.
double updown_symmetry_defect(const CVector& eigenvalues);

}  // namespace ptcoul
