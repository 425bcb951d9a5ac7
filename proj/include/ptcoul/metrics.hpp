// Copyright 2026 The ptcoul Authors
// SPDX-License-Identifier: Apache-2.0

// Hermitizing metrics Theta with H^dagger Theta = Theta H, the physical inner
// product they define, and the closed-form N = 2 and N = 4 families.

#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "ptcoul/eigensolve.hpp"
#include "ptcoul/types.hpp"

namespace ptcoul {

namespace provenance {
struct Biorthogonal {
  std::vector<double> weights;
};
struct N2Family {
  double k_scale;
  double m_shape;
  double coupling;
};
struct N4Ansatz {
  double k_scale;
  double m_shape;
  double r_inner;
  double eta_corner;
  double coupling;
  double exponent;
};
struct CptCharge {
  double coupling;
};
struct External {};
}  // namespace provenance

using MetricProvenance =
    std::variant<provenance::Biorthogonal, provenance::N2Family, provenance::N4Ansatz,
                 provenance::CptCharge, provenance::External>;

std::string describe(const MetricProvenance& p);

inline constexpr double kHermiticityTolerance = 1e-14;

/// Hermitian matrix plus where it came from. Construction rejects matrices
/// that are not Hermitian to kHermiticityTolerance (relative to the largest
/// entry); positivity is a separate check.
class MetricCandidate {
 public:
  MetricCandidate(CMatrix matrix, MetricProvenance provenance);

  static MetricCandidate external(CMatrix matrix) {
    return MetricCandidate(std::move(matrix), provenance::External{});
  }

  const CMatrix& matrix() const { return matrix_; }
  const MetricProvenance& provenance() const { return provenance_; }
  Eigen::Index size() const { return matrix_.rows(); }

 private:
  CMatrix matrix_;
  MetricProvenance provenance_;
};

/// Strictly positive weights |kappa_n|^2, one per eigenpair.
class KappaWeights {
 public:
  static KappaWeights ones(Eigen::Index n) {
    return KappaWeights(std::vector<double>(static_cast<std::size_t>(n), 1.0));
  }
  explicit KappaWeights(std::vector<double> weights);

  const std::vector<double>& values() const { return weights_; }
  std::size_t size() const { return weights_.size(); }

 private:
  std::vector<double> weights_;
};

/// max |M - M^dagger| / max(1, max |M|).
template <typename Derived>
double hermiticity_error(const Eigen::MatrixBase<Derived>& m) {
  const double scale = std::max(1.0, static_cast<double>(m.cwiseAbs().maxCoeff()));
  return static_cast<double>((m - m.adjoint()).cwiseAbs().maxCoeff()) / scale;
}

/// ||H^dagger Theta - Theta H||_F / (||H||_F ||Theta||_F); 0 for a zero operand.
template <typename DerivedH, typename DerivedT>
double dieudonne_residual(const Eigen::MatrixBase<DerivedH>& h,
                          const Eigen::MatrixBase<DerivedT>& theta) {
  if (h.rows() != theta.rows() || h.cols() != theta.cols()) {
    throw DomainError("dieudonne_residual: dimension mismatch");
  }
  const double denom = static_cast<double>(h.norm() * theta.norm());
  if (denom == 0.0) return 0.0;
  return static_cast<double>((h.adjoint() * theta - theta * h).norm()) / denom;
}

inline double dieudonne_residual(const CMatrix& h, const MetricCandidate& theta) {
  return dieudonne_residual(h, theta.matrix());
}

/// (psi, phi)_S = sum_jk conj(psi_j) Theta_jk phi_k.
template <typename DerivedA, typename DerivedB>
Complex s_inner_product(const Eigen::MatrixBase<DerivedA>& psi,
                        const Eigen::MatrixBase<DerivedB>& phi, const MetricCandidate& theta) {
  if (psi.size() != theta.size() || phi.size() != theta.size()) {
    throw DomainError("s_inner_product: dimension mismatch");
  }
  return psi.dot(theta.matrix() * phi);
}

/// Theta = sum_n |psi_n>> w_n <<psi_n| over the left eigenvectors, with the
/// biorthonormal convention <<psi_n|psi_n> = 1. Requires a real spectrum.
MetricCandidate metric_from_biorthogonal(const EigenSystem& system, const KappaWeights& weights);

struct PositivityReport {
  bool positive = false;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
};

PositivityReport is_positive(const MetricCandidate& theta);

/// Smallest theta such that |Theta_mn| <= tolerance * max|Theta| whenever
/// |m - n| > theta.
int band_width(const MetricCandidate& theta, double tolerance);

/// Real dimension of the Hermitian solution space of H^dagger Theta = Theta H,
/// from the rank of the vectorized real-linear map.
int dieudonne_solution_dimension(const CMatrix& h, double rank_tolerance = 1e-10);

// N = 2 -------------------------------------------------------------------

/// [[k, k m - i k a], [k m + i k a, k]]; metrics of H^(2)(a) for all real k, m.
MetricCandidate n2_metric(double k_scale, double m_shape, double coupling);

/// Closed-form eigenvalues k -/+ sqrt(k^2 m^2 + k^2 a^2), ascending.
std::array<double, 2> n2_metric_eigenvalues(double k_scale, double m_shape, double coupling);

/// k [[1, e^{-i gamma} cos beta], [e^{i gamma} cos beta, 1]], i.e.
/// n2_metric with m = cos beta cos gamma and a = cos beta sin gamma.
MetricCandidate n2_metric_angles(double k_scale, double beta, double gamma);

struct CptChargeN2 {
  Eigen::Matrix2cd charge;
  /// k = 1 / sqrt(1 - a^2), forced by C^2 = I.
  double scale = 1.0;
  double coupling = 0.0;

  /// Theta = C P.
  MetricCandidate metric() const;
};

CptChargeN2 cpt_charge_n2(double coupling);

/// Lambda = [[G + i g, B + i b], [C + i c, D + i d]] from the four free
/// parameters (D, b, c, g); the remaining entries are fixed by
/// Lambda^dagger Theta = Theta Lambda against n2_metric(k, m_shape, a).
struct ObservableCandidate {
  Eigen::Matrix2cd matrix;
  double d_diag = 0.0;
  double b_im = 0.0;
  double c_im = 0.0;
  double g_im = 0.0;
  // Derived entries.
  double g_re = 0.0;
  double b_re = 0.0;
  double c_re = 0.0;
  double d_im = 0.0;
};

ObservableCandidate n2_observable(double d_diag, double b_im, double c_im, double g_im,
                                  double coupling, double m_shape = 0.0);

// N = 4 -------------------------------------------------------------------

/// The 4x4 Hermitian ansatz with w = 3^z a and the corner entries W, Z.
MetricCandidate n4_metric_ansatz(double k_scale, double m_shape, double r_inner, double eta_corner,
                                 double coupling, double exponent);

/// Closed-form eigenvalues of n4_metric_ansatz(1, 0, 1, 0, a, z):
/// 1 +/- (w - a^2 w + w^3)/2 +/- sqrt(Delta^{+/-})/2, ascending.
std::array<double, 4> n4_unit_metric_eigenvalues(double coupling, double exponent);

}  // namespace ptcoul
