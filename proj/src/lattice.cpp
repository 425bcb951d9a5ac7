// Copyright 2026 The ptcoul Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptcoul/lattice.hpp"

#include <cmath>
#include <string>

namespace ptcoul {

namespace {

void require_even_size(int n_points) {
  if (n_points < 2 || n_points % 2 != 0) {
    throw DomainError(
        "n_points must be even and >= 2 (odd N puts a node on the x = 0 "
        "singularity), got " +
        std::to_string(n_points));
  }
}

CMatrix kinetic_part(int n_points) {
  CMatrix h = CMatrix::Zero(n_points, n_points);
  for (int j = 0; j + 1 < n_points; ++j) {
    h(j, j + 1) = -1.0;
    h(j + 1, j) = -1.0;
  }
  return h;
}

}  // namespace

GridSpec build_grid(int n_points, double cutoff) {
  require_even_size(n_points);
  if (!(cutoff > 0.0) || !std::isfinite(cutoff)) {
    throw DomainError("cutoff must be a positive finite number");
  }
  GridSpec grid;
  grid.n_points = n_points;
  grid.cutoff = cutoff;
  grid.spacing = 2.0 * cutoff / (n_points + 1);
  grid.nodes.reserve(n_points);
  for (int j = 1; j <= n_points; ++j) {
    grid.nodes.push_back((2 * j - n_points - 1) * grid.spacing / 2.0);
  }
  return grid;
}

Complex coulomb_diagonal(int n_points, int j, double coupling, double exponent) {
  const int offset = 2 * j - n_points - 1;
  const double sign = offset > 0 ? 1.0 : -1.0;
  const double magnitude = std::abs(offset);
  // z = -1 is kept as a plain division so the Coulomb entries read a/(2j-1).
  const double strength =
      exponent == -1.0 ? coupling / magnitude : coupling * std::pow(magnitude, exponent);
  return {2.0, sign * strength};
}

LatticeHamiltonian build_coulomb_hamiltonian(int n_points, double coupling, double exponent) {
  require_even_size(n_points);
  LatticeHamiltonian out;
  out.matrix = kinetic_part(n_points);
  for (int j = 1; j <= n_points; ++j) {
    out.matrix(j - 1, j - 1) = coulomb_diagonal(n_points, j, coupling, exponent);
  }
  out.coupling = coupling;
  out.exponent = exponent;
  return out;
}

LatticeHamiltonian build_general_hamiltonian(const GridSpec& grid,
                                             const std::function<Complex(double)>& potential) {
  require_even_size(grid.n_points);
  const double h2 = grid.spacing * grid.spacing;
  LatticeHamiltonian out;
  out.matrix = kinetic_part(grid.n_points);
  for (int j = 0; j < grid.n_points; ++j) {
    const Complex v = potential(grid.nodes[j]);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw DomainError("potential is not finite at node " + std::to_string(j + 1) +
                        " (x = " + std::to_string(grid.nodes[j]) + ")");
    }
    out.matrix(j, j) = 2.0 + h2 * v;
  }
  out.coupling = 0.0;
  out.exponent = 0.0;
  out.grid = grid;
  return out;
}

RMatrix parity(int n_points) {
  if (n_points < 1) throw DomainError("parity needs n_points >= 1");
  return RMatrix::Identity(n_points, n_points).rowwise().reverse();
}

}  // namespace ptcoul
