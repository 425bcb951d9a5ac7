// Copyright 2026 The ptcoul Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptcoul/eigensolve.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace ptcoul {

namespace {

double spectral_scale(const CMatrix& h) { return std::max(1.0, h.norm()); }

// Inverse iteration for the eigenvector of `a` belonging to `shift`. The
// shift is nudged off the computed eigenvalue so the LU factor stays finite.
CVector inverse_iteration(const CMatrix& a, Complex shift, double scale) {
  const Eigen::Index n = a.rows();
  const double nudge = 64.0 * std::numeric_limits<double>::epsilon() * scale;
  const Complex sigma = shift + Complex(nudge, nudge);
  const Eigen::PartialPivLU<CMatrix> lu(a - sigma * CMatrix::Identity(n, n));
  CVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    // Fixed, non-symmetric start so no eigenvector is orthogonal to it.
    v(i) = Complex(1.0 + 0.1 * static_cast<double>(i), 0.05 * static_cast<double>(i % 3));
  }
  v.normalize();
  for (int sweep = 0; sweep < 4; ++sweep) {
    v = lu.solve(v);
    const double norm = v.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
      throw ConvergenceError("inverse iteration broke down near eigenvalue (" +
                             std::to_string(shift.real()) + ", " + std::to_string(shift.imag()) +
                             ")");
    }
    v /= norm;
  }
  // Fix the phase: largest component real positive.
  Eigen::Index pivot = 0;
  v.cwiseAbs().maxCoeff(&pivot);
  v *= std::conj(v(pivot)) / std::abs(v(pivot));
  return v;
}

}  // namespace

int Spectrum::count_real() const {
  return static_cast<int>(std::count(real_flags.begin(), real_flags.end(), true));
}

Spectrum classify(CVector eigenvalues, double scale, double classification_tolerance) {
  std::vector<Complex> sorted(eigenvalues.data(), eigenvalues.data() + eigenvalues.size());
  std::sort(sorted.begin(), sorted.end(), [](const Complex& x, const Complex& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  Spectrum out;
  out.eigenvalues =
      Eigen::Map<const CVector>(sorted.data(), static_cast<Eigen::Index>(sorted.size()));
  out.classification_tolerance = classification_tolerance;
  out.scale = std::max(1.0, scale);
  out.real_flags.reserve(sorted.size());
  const double threshold = classification_tolerance * out.scale;
  for (const auto& e : sorted) out.real_flags.push_back(std::abs(e.imag()) <= threshold);
  return out;
}

Spectrum eigenvalues(const CMatrix& h, double classification_tolerance) {
  CVector eig = detail::dense_eigenvalues<Complex>(h);
  return classify(std::move(eig), spectral_scale(h), classification_tolerance);
}

EigenSystem eigensystem(const CMatrix& h, double classification_tolerance,
                        double separation_threshold) {
  EigenSystem out;
  out.spectrum = eigenvalues(h, classification_tolerance);
  const Eigen::Index n = h.rows();
  const double scale = spectral_scale(h);
  const CVector& eps = out.spectrum.eigenvalues;

  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double gap = std::abs(eps(i) - eps(j));
      if (gap < separation_threshold * scale) {
        throw DegeneracyError("eigenvalues " + std::to_string(i) + " and " + std::to_string(j) +
                                  " are closer than the separation threshold (gap " +
                                  std::to_string(gap) + "); exceptional-point vicinity",
                              static_cast<std::size_t>(i), static_cast<std::size_t>(j), gap);
      }
    }
  }

  const CMatrix adjoint = h.adjoint();
  out.right.resize(n, n);
  out.left.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    CVector right = inverse_iteration(h, eps(k), scale);
    CVector left = inverse_iteration(adjoint, std::conj(eps(k)), scale);
    const Complex overlap = left.dot(right);  // <<psi_k|psi_k> = left^H right
    if (std::abs(overlap) < std::numeric_limits<double>::epsilon()) {
      throw DegeneracyError(
          "left/right overlap vanishes for eigenvalue " + std::to_string(k) + "; exceptional point",
          static_cast<std::size_t>(k), static_cast<std::size_t>(k), 0.0);
    }
    left /= std::conj(overlap);
    out.right.col(k) = right;
    out.left.col(k) = left;
  }
  return out;
}

}  // namespace ptcoul
