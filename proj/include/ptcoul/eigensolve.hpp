// Copyright 2026 The ptcoul Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "ptcoul/detail/hessenberg_qr.hpp"
#include "ptcoul/types.hpp"

namespace ptcoul {

inline constexpr double kDefaultRealityTolerance = 1e-9;
inline constexpr double kDefaultSeparationThreshold = 1e-8;

/// Eigenvalues sorted by (Re, Im) with a per-eigenvalue reality flag.
struct Spectrum {
  CVector eigenvalues;
  std::vector<bool> real_flags;
  double classification_tolerance = kDefaultRealityTolerance;
  /// max(1, ||H||_F); the imaginary-part threshold is tolerance * scale.
  double scale = 1.0;

  Eigen::Index size() const { return eigenvalues.size(); }
  int count_real() const;
  bool fully_real() const { return count_real() == size(); }
};

enum class Normalization {
  /// ||psi_n||_2 = 1 and <<psi_n|psi_n> = 1.
  kUnitRightBiorthonormal,
};

/// Right vectors (columns of `right`) and left vectors (columns of `left`,
/// eigenvectors of H^dagger for conj(eps_n)), paired by column index.
struct EigenSystem {
  Spectrum spectrum;
  CMatrix right;
  CMatrix left;
  Normalization normalization = Normalization::kUnitRightBiorthonormal;
};

/// Spectrum of a dense complex matrix.
Spectrum eigenvalues(const CMatrix& h, double classification_tolerance = kDefaultRealityTolerance);

/// Sorts eigenvalues by (Re, Im) and classifies them against `scale`.
Spectrum classify(CVector eigenvalues, double scale, double classification_tolerance);

/// Right and left eigenvectors normalized so that <<psi_m|psi_n> = delta_mn.
/// Throws DegeneracyError when two eigenvalues are closer than
/// separation_threshold * max(1, ||H||_F).
EigenSystem eigensystem(const CMatrix& h,
                        double classification_tolerance = kDefaultRealityTolerance,
                        double separation_threshold = kDefaultSeparationThreshold);

namespace detail {

// Accumulation type for the Berkowitz recurrence: double input is promoted to
// long double, since the leading blocks of a PT-symmetric matrix are not
// PT-symmetric and their large imaginary parts must cancel at the end.
template <typename Scalar>
struct Accumulator {
  using type = Scalar;
};
template <>
struct Accumulator<std::complex<double>> {
  using type = std::complex<long double>;
};
template <>
struct Accumulator<double> {
  using type = long double;
};

}  // namespace detail

/// Monic coefficients of det(E I - H), highest degree first, by the
/// division-free Berkowitz recurrence (independent of the QR path).
/// Works for any scalar Eigen supports, e.g. std::complex<long double>.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> characteristic_polynomial(
    const Eigen::MatrixBase<Derived>& h) {
  using Scalar = typename Derived::Scalar;
  using Work = typename detail::Accumulator<Scalar>::type;
  using Vec = Eigen::Matrix<Work, Eigen::Dynamic, 1>;
  using Mat = Eigen::Matrix<Work, Eigen::Dynamic, Eigen::Dynamic>;
  if (h.rows() != h.cols()) throw DomainError("characteristic_polynomial needs a square matrix");
  const Eigen::Index n = h.rows();
  Vec p(1);
  p(0) = Work(1);
  if (n == 0) return p.template cast<Scalar>();

  const Mat a = h.template cast<Work>();
  p.resize(2);
  p << Work(1), -a(0, 0);
  for (Eigen::Index k = 1; k < n; ++k) {
    // Leading block A_k, new row R, column C and corner entry.
    const auto block = a.topLeftCorner(k, k);
    const auto row = a.block(k, 0, 1, k);
    Vec column = a.block(0, k, k, 1);
    Vec toeplitz(k + 2);
    toeplitz(0) = Work(1);
    toeplitz(1) = -a(k, k);
    for (Eigen::Index j = 2; j <= k + 1; ++j) {
      toeplitz(j) = -(row * column)(0, 0);
      column = (block * column).eval();
    }
    Vec next = Vec::Zero(k + 2);
    for (Eigen::Index i = 0; i <= k + 1; ++i) {
      for (Eigen::Index j = std::max<Eigen::Index>(0, i - k); j <= i; ++j) {
        next(i) += toeplitz(j) * p(i - j);
      }
    }
    p = std::move(next);
  }
  return p.template cast<Scalar>();
}

}  // namespace ptcoul
