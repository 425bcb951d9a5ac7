// Copyright 2026 The ptcoul Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ptcoul/types.hpp"

namespace ptcoul {

/// Equidistant Dirichlet grid on (-cutoff, cutoff). The N interior nodes sit
/// at half-odd multiples of the spacing, x_j = (2j - N - 1) h / 2, so the
/// origin is never a node. psi vanishes at the two implicit boundary nodes.
struct GridSpec {
  int n_points = 0;
  double cutoff = 0.0;
  double spacing = 0.0;
  std::vector<double> nodes;
};

GridSpec build_grid(int n_points, double cutoff);

/// Tridiagonal lattice Hamiltonian in the dimensionless convention
/// eps = h^2 E: off-diagonals -1, diagonal 2 + h^2 V(x_j).
struct LatticeHamiltonian {
  CMatrix matrix;
  double coupling = 0.0;
  double exponent = -1.0;
  std::optional<GridSpec> grid;

  Eigen::Index size() const { return matrix.rows(); }
};

/// Diagonal entry j (1-based) of H^(N)(a, z):
/// 2 + i a sgn(2j - N - 1) |2j - N - 1|^z.
Complex coulomb_diagonal(int n_points, int j, double coupling, double exponent);

/// The PT-symmetric power-law family. At z = -1 this is the discrete
/// imaginary Coulomb chain with diagonal 2 -/+ i a / (2j - 1).
LatticeHamiltonian build_coulomb_hamiltonian(int n_points, double coupling, double exponent = -1.0);

/// Finite-difference Hamiltonian for an arbitrary potential sampled on the
/// grid nodes. Throws DomainError naming the node when V is not finite.
LatticeHamiltonian build_general_hamiltonian(const GridSpec& grid,
                                             const std::function<Complex(double)>& potential);

/// Coupling of the Coulomb chain equivalent to V(x) = iZ/x on this grid.
inline double coulomb_coupling_from_charge(const GridSpec& grid, double charge) {
  return 2.0 * grid.spacing * charge;
}

/// Anti-diagonal permutation, P(m, n) = 1 iff m + n = N + 1 (1-based).
RMatrix parity(int n_points);

/// max |P conj(H) P - H| <= tolerance.
template <typename Derived>
bool is_pt_symmetric(const Eigen::MatrixBase<Derived>& h, double tolerance) {
  if (h.rows() != h.cols()) return false;
  const Eigen::Index n = h.rows();
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      // (P conj(H) P)(r, c) = conj(H(n-1-r, n-1-c))
      const auto flipped = std::conj(h(n - 1 - r, n - 1 - c));
      if (std::abs(flipped - h(r, c)) > tolerance) return false;
    }
  }
  return true;
}

}  // namespace ptcoul
