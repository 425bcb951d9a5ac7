// Copyright 2026 The ptcoul Authors
// SPDX-License-Identifier: Apache-2.0

// Dense complex eigenvalues: balancing, Householder reduction to upper
// Hessenberg form, and single-shift QR with Wilkinson shifts and deflation.
// Templated on the complex scalar so the same code runs in double and in
// extended precision.

#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "ptcoul/types.hpp"

namespace ptcoul::detail {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
auto abs1(const Scalar& x) {
  return std::abs(std::real(x)) + std::abs(std::imag(x));
}

/// Diagonal similarity by powers of two so that row and column 1-norms of
/// each index are comparable. Exact in binary floating point.
template <typename Scalar>
void balance(DenseMatrix<Scalar>& a) {
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  const Eigen::Index n = a.rows();
  constexpr Real radix = 2;
  constexpr Real radix2 = radix * radix;
  bool converged = false;
  while (!converged) {
    converged = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      Real col = 0;
      Real row = 0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        col += abs1(a(j, i));
        row += abs1(a(i, j));
      }
      if (col == Real(0) || row == Real(0)) continue;
      Real g = row / radix;
      Real f = 1;
      const Real s = col + row;
      while (col < g) {
        f *= radix;
        col *= radix2;
      }
      g = row * radix;
      while (col > g) {
        f /= radix;
        col /= radix2;
      }
      if ((col + row) / f < Real(0.95) * s) {
        converged = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

/// In-place Householder similarity to upper Hessenberg form. Columns whose
/// sub-subdiagonal part is already zero are left untouched, so tridiagonal
/// input passes through bit-identical.
template <typename Scalar>
void reduce_to_hessenberg(DenseMatrix<Scalar>& a) {
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k + 2 < n; ++k) {
    const Eigen::Index m = n - k - 1;
    DenseVector<Scalar> v = a.block(k + 1, k, m, 1);
    if (v.tail(m - 1).squaredNorm() == Real(0)) continue;
    const Real norm = v.norm();
    const Real head = std::abs(v(0));
    const Scalar phase = head == Real(0) ? Scalar(1) : v(0) / head;
    v(0) += phase * norm;
    const Real vnorm = v.norm();
    if (vnorm == Real(0)) continue;
    v /= vnorm;
    // A <- (I - 2 v v^H) A (I - 2 v v^H) restricted to the trailing rows/cols.
    auto rows = a.block(k + 1, 0, m, n);
    const Eigen::Matrix<Scalar, 1, Eigen::Dynamic> w = v.adjoint() * rows;
    rows -= Scalar(2) * v * w;
    auto cols = a.block(0, k + 1, n, m);
    const DenseVector<Scalar> u = cols * v;
    cols -= Scalar(2) * u * v.adjoint();
    a.block(k + 2, k, m - 1, 1).setZero();
  }
}

/// Plane rotation G = [[c, s], [-conj(s), c]] with G [x; y] = [r; 0].
template <typename Scalar>
struct Givens {
  typename Eigen::NumTraits<Scalar>::Real c;
  Scalar s;

  static Givens make(const Scalar& x, const Scalar& y) {
    using Real = typename Eigen::NumTraits<Scalar>::Real;
    const Real ax = std::abs(x);
    const Real ay = std::abs(y);
    if (ay == Real(0)) return {Real(1), Scalar(0)};
    if (ax == Real(0)) return {Real(0), Scalar(1)};
    using std::hypot;
    const Real r = hypot(ax, ay);
    return {ax / r, (x / ax) * std::conj(y) / r};
  }
};

/// Eigenvalue of the trailing 2x2 block closest to its last diagonal entry.
template <typename Scalar>
Scalar wilkinson_shift(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  const Scalar half_trace_gap = (a - d) / Scalar(2);
  const Scalar disc = std::sqrt(half_trace_gap * half_trace_gap + b * c);
  const Scalar mu1 = d - b * c / (half_trace_gap + disc);
  const Scalar mu2 = d - b * c / (half_trace_gap - disc);
  const bool ok1 = std::isfinite(std::abs(mu1));
  const bool ok2 = std::isfinite(std::abs(mu2));
  if (ok1 && (!ok2 || std::abs(mu1 - d) <= std::abs(mu2 - d))) return mu1;
  if (ok2) return mu2;
  return d;
}

/// Eigenvalues of an upper Hessenberg matrix by shifted QR with deflation
/// when |h(k,k-1)| <= u (|h(k-1,k-1)| + |h(k,k)|). Destroys `h`.
template <typename Scalar>
DenseVector<Scalar> hessenberg_qr_eigenvalues(DenseMatrix<Scalar>& h,
                                              int max_iterations_per_eigenvalue = 60) {
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  const Eigen::Index n = h.rows();
  const Real unit = std::numeric_limits<Real>::epsilon();
  DenseVector<Scalar> eig(n);
  Eigen::Index hi = n - 1;
  int iterations = 0;
  int total = 0;
  const int cap = max_iterations_per_eigenvalue * static_cast<int>(std::max<Eigen::Index>(n, 1));

  while (hi >= 0) {
    Eigen::Index lo = hi;
    while (lo > 0) {
      const Real scale = abs1(h(lo - 1, lo - 1)) + abs1(h(lo, lo));
      if (abs1(h(lo, lo - 1)) <= unit * scale ||
          abs1(h(lo, lo - 1)) <= std::numeric_limits<Real>::min()) {
        h(lo, lo - 1) = Scalar(0);
        break;
      }
      --lo;
    }
    if (lo == hi) {
      eig(hi) = h(hi, hi);
      --hi;
      iterations = 0;
      continue;
    }
    if (++total > cap) {
      throw ConvergenceError("QR iteration did not converge within " + std::to_string(cap) +
                             " sweeps");
    }
    ++iterations;

    Scalar shift;
    if (iterations % 11 == 0) {
      // Exceptional shift to break cycling.
      shift = h(hi, hi) + Scalar(Real(0.75) * abs1(h(hi, hi - 1)));
    } else {
      shift = wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
    }

    for (Eigen::Index k = lo; k <= hi; ++k) h(k, k) -= shift;
    std::vector<Givens<Scalar>> rotations;
    rotations.reserve(static_cast<std::size_t>(hi - lo));
    for (Eigen::Index k = lo; k < hi; ++k) {
      const auto g = Givens<Scalar>::make(h(k, k), h(k + 1, k));
      rotations.push_back(g);
      for (Eigen::Index j = k; j <= hi; ++j) {
        const Scalar x = h(k, j);
        const Scalar y = h(k + 1, j);
        h(k, j) = g.c * x + g.s * y;
        h(k + 1, j) = -std::conj(g.s) * x + g.c * y;
      }
      h(k + 1, k) = Scalar(0);
    }
    for (Eigen::Index k = lo; k < hi; ++k) {
      const auto& g = rotations[static_cast<std::size_t>(k - lo)];
      for (Eigen::Index i = lo; i <= std::min(k + 1, hi); ++i) {
        const Scalar x = h(i, k);
        const Scalar y = h(i, k + 1);
        h(i, k) = g.c * x + std::conj(g.s) * y;
        h(i, k + 1) = -g.s * x + g.c * y;
      }
    }
    for (Eigen::Index k = lo; k <= hi; ++k) h(k, k) += shift;
  }
  return eig;
}

/// Full pipeline on a copy of `a`.
template <typename Scalar>
DenseVector<Scalar> dense_eigenvalues(DenseMatrix<Scalar> a) {
  if (a.rows() != a.cols()) throw DomainError("eigenvalues need a square matrix");
  if (!a.allFinite()) throw DomainError("matrix has non-finite entries");
  if (a.rows() == 0) return {};
  balance(a);
  reduce_to_hessenberg(a);
  return hessenberg_qr_eigenvalues(a);
}

}  // namespace ptcoul::detail
